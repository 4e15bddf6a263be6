"""Convolutional codes, their decoders, and DNA code tools."""

__version__ = "0.1.0"

from .convcode import CodeSpec, Codeword, StateDiagram, build_state_diagram  # noqa: E402
from .gf2poly import BinaryPoly  # noqa: E402

__all__ = ["BinaryPoly", "CodeSpec", "Codeword", "StateDiagram", "build_state_diagram", "__version__"]
