from .schreier import (
    ClosedBraidClass,
    SchreierForm,
    are_conjugate,
    closed_braid_class,
    composite_witness,
    schreier_normal_form,
)
from .surgery import (
    FramedBraid,
    LinkingModel,
    SurgeryDescription,
    braid_from_surgery,
    closure_linking_matrix,
    filling_to_surgery,
    framed_braid_h1,
    h1_order,
    surgery_to_filling,
)
from .words import BraidWord3, braid_closure_diagram, q5_word

__all__ = [
    "BraidWord3",
    "ClosedBraidClass",
    "FramedBraid",
    "LinkingModel",
    "SchreierForm",
    "SurgeryDescription",
    "are_conjugate",
    "braid_closure_diagram",
    "braid_from_surgery",
    "closed_braid_class",
    "closure_linking_matrix",
    "composite_witness",
    "filling_to_surgery",
    "framed_braid_h1",
    "h1_order",
    "q5_word",
    "schreier_normal_form",
    "surgery_to_filling",
]
