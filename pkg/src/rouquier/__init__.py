"""Combinatorics of unipotent Rouquier blocks of finite classical groups."""

from .induction import (
    UnipotentLabel,
    aba_complement,
    bead_slide_targets,
    induce_unipotent_mult,
    slide_moves,
)
from .lr import lr_coeff, syt_count
from .params import (
    BlockContext,
    Family,
    PClassSet,
    admissible_core,
    block_context,
    derive_params,
    group_order,
    m_of_w,
    minimal_admissible_core,
    p_element_classes,
)
from .partitions import (
    AbacusView,
    beta_of_partition,
    e_core_and_weight,
    e_quotient,
    hooks,
    partition_from_core_and_quotient,
    partition_of_beta,
    remove_hook,
    shift,
)
from .polynomial import FormalPolynomial
from .symbols import (
    SmnLabel,
    Symbol,
    canonical_symbol,
    defect_and_rank,
    from_smn,
    linear_diagram,
    smn_relabel,
    symbol_e_core,
)
from .verifier import (
    CharLabel,
    TargetLabel,
    dimension_variable,
    enumerate_block_labels,
    induced_expansion,
    verify_rank_identity,
)
from .weyl import DCharLabel, branch_A, branch_B, branch_D

__version__ = "0.1.0"
