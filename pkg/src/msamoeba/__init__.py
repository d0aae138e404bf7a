"""Real-rooted polynomial classes, multiplier sequences and discriminant amoebae."""
from .errors import MsAmoebaError
from .polycore import GammaSeq, Poly, SignPattern, apply_diagonal, flip_signs
from .realroots import ClassFlags, classify, root_report

__version__ = "0.1.0"

__all__ = ["MsAmoebaError", "GammaSeq", "Poly", "SignPattern", "apply_diagonal",
           "flip_signs", "ClassFlags", "classify", "root_report", "__version__"]
