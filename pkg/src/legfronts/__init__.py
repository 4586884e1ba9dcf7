"""Legendrian front diagrams, normal rulings, and skein polynomial invariants."""

from .fronts import (
    ClassicalInvariants,
    ComponentMap,
    FrontDiagram,
    FrontEvent,
    FrontFormatError,
    InvalidFrontError,
    MaslovAssignment,
    NormalFormError,
    ValidationReport,
    classical_invariants,
    components,
    connected_sum,
    crossing_index,
    crossing_indices,
    front,
    maslov_potential,
    parse_front,
    render_front,
    validate,
)
from .laurent import HomflyProfile, VZPoly, ZPoly, coefficient_of_v, conway, profile
from .rulings import (
    GradingClass,
    PairingState,
    Ruling,
    RulingCensus,
    census,
    classify,
    enumerate_rulings,
    genus,
    is_normal_switch,
    ruling_polynomial,
    theta,
)
from .skein import (
    LinkDiagram,
    ResourceLimitError,
    conway_polynomial,
    front_to_diagram,
    homfly,
    kauffman_dubrovnik,
    seifert_circle_count,
    seifert_diagram_genus,
)
from .analysis import (
    AnalysisReport,
    analyze,
    connsum_check,
    genus_tests,
    max_tb_certificate,
    no_ruling_tests,
    rho_report,
    rutherford_check,
)
from . import corpus

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
