from .syntax import (
    CONSTANT_ARITY,
    FUNCTORIAL_KINDS,
    A_,
    AInv,
    App,
    Arrow,
    Bang,
    C_,
    Cobang,
    Codiag,
    Comp,
    Const,
    Delta_,
    Diag,
    Eps,
    Eta,
    FApp,
    FunctorSymbol,
    I,
    Id,
    L_,
    Letter,
    LInv,
    Mu,
    Obj,
    Psi,
    Psi0,
    PsiL,
    PsiR,
    R_,
    RInv,
    Tens,
    Tensor,
    Unit,
    arrow_at,
    arrow_positions,
    compose,
    constants_of,
    functors_of,
    letters_of,
    object_nodes,
    replace_arrow_at,
    replace_at,
    subformula,
    tensor_all,
    term_size,
)
from .theories import DELTA, DELTA_OP, FUN, L, REL, THEORIES, THEORY_NAMES, T, Theory, get_theory, indexed
from .typing import (
    Occurrence,
    TypedArrow,
    canonicalize,
    constant_type,
    counted_positions,
    expand_derived,
    infer_type,
    injections,
    measure,
    typed,
    validate_object,
)
