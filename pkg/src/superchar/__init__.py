"""Exact character rings of classical Lie superalgebras.

Root data, bases of positive roots and odd reflections, dominance, the
ring of ξ-characters with its membership tests, and short-basis elements.
"""

from .base_forest import (
    Base,
    base_from_word,
    check_pr1,
    default_base,
    dynkin_diagram,
    enumerate_bases,
    is_mixed,
    odd_reflect,
    pr3_counts,
    satisfies_coro_hypothesis,
    satisfies_pr2,
)
from .dominance import (
    Unsupported,
    enumerate_Y,
    highest_weights,
    is_dominant_integrable,
    is_dominant_integrable_closed,
    is_dominant_pi,
    track_highest_weight,
)
from .root_datum import (
    RootDatum,
    Weight,
    bilinear_form,
    build_root_datum,
    dominant_representative,
    iso_transversal,
    leq,
    pair_hbeta,
    simple_reflection,
    weyl_orbit,
)
from .serialization import parse_algebra, parse_base, parse_element, parse_weight
from .short_basis import (
    HypothesisViolation,
    ShortBasisElement,
    compute_b,
    decompose,
    orbit_sum_b,
    verify_axioms,
)
from .xi_ring import (
    XI,
    RingElement,
    XiCoeff,
    ch_xi_C,
    ev_condition,
    explain_A,
    gl11_character,
    in_A,
    in_R,
    iota,
    psi,
    str_split,
    string_condition,
    sv_condition,
)

__version__ = "0.1.0"
