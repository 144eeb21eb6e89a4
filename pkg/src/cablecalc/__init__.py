"""Exact bridge spectra and cable-space surface slopes for iterated torus knots."""
from .cablespace import (
    EULER_BUDGETS,
    BoundaryData,
    CableSpace,
    SurfaceClass,
    SurfaceKind,
    cover_euler_cable,
    cover_euler_torus_exterior,
    horizontal_class,
    integral_propagates,
    meridional_iff,
    min_euler_budget,
    planar_a_class,
    planar_b_class,
    vertical_class,
)
from .grid import GridSpec, SearchTarget, admissible_classes, enumerate_knots, search
from .slopes import MERIDIAN, BasisChange, Slope, apply_basis_change, delta, make_fill_basis_change, normalize
from .spectrum import (
    BridgeSpectrum,
    CablingParams,
    GapReport,
    InadmissibleKnotError,
    InvalidKnotError,
    IteratedTorusKnot,
    KnotParseError,
    bridge_spectrum,
    closed_form_b0,
    gaps,
    h_genus,
    index_n_entry,
    naive_upper_spectrum,
    spectrum_report,
    tunnel_number,
    validate,
)
from .splittings import (
    ChiAssembly,
    ChiPiece,
    SplittingLedger,
    amalgamation_genus,
    chi_assembly,
    forced_bridge_bound,
    segment_genus,
    untelescoped_lower_bound,
)

__version__ = "0.1.0"
