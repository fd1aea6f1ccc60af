"""Groups of invertible binary operations and binary G-spaces on finite sets."""
from .action import (
    BinaryActionTable,
    FiniteMap,
    OrdinaryActionTable,
    Verdict,
    conjugation_action,
    conjugation_intertwiner,
    conjugation_map,
    enumerate_biequivariant_maps,
    from_ordinary,
    homomorphism_to_h2_holds,
    induced_action,
    is_binary_action,
    is_biequivariant,
    is_equivariant,
    is_ordinary_action,
    lift_map,
    product_gspace,
    trivial_action,
)
from .core import (
    BinOpTable,
    PermFamily,
    Permutation,
    binop_to_perm_family,
    brute_enumerate_invertible,
    compose,
    element_order,
    embed_homeomorphism,
    enumerate_h2,
    identity_binop,
    invert,
    is_invertible,
    perm_family_to_binop,
    slice_at,
)
from .groups import (
    FiniteGroup,
    cyclic_group,
    group_axioms_hold,
    h2_group,
    klein_four_group,
    structure_fingerprint,
    symmetric_group,
)
from .invariants import (
    Subset,
    apply_g,
    apply_set,
    check_theorem8,
    enumerate_invariant_subsets,
    g_xx_set,
    is_distributive,
    is_invariant,
    orbit,
)
from .kernels import BACKEND

__version__ = "0.1.0"
