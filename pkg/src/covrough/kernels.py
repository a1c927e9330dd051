"""Kernel backend selection.

The compiled module is used when it imports and the universe fits in one
machine word; everything else goes to the pure-Python twin. Setting
``COVROUGH_PURE=1`` forces the pure-Python path.
"""

import os

from covrough import _purekernels as pure

try:
    if os.environ.get("COVROUGH_PURE", "") not in ("", "0"):
        raise ImportError("pure backend forced")
    from covrough import _kernels as fast
except ImportError:
    fast = None

WORD_BITS = 64
# member cap for the word-sized sub-family union array in the compiled path
FAST_MAX_MEMBERS = 26

BACKEND = fast.BACKEND if fast is not None else pure.BACKEND


def backends():
    """All importable backends, pure first."""
    return [pure] if fast is None else [pure, fast]


def for_width(n, members=0):
    if fast is not None and n <= WORD_BITS and members <= FAST_MAX_MEMBERS:
        return fast
    return pure
