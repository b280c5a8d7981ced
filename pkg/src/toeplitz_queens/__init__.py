# SPDX-License-Identifier: Apache-2.0

"""Toeplitz Queens - nonattacking queens on the symmetric Toeplitz board"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("toeplitz-queens")
except PackageNotFoundError:
    # running from a source checkout
    __version__ = "0.0.0"
__all__ = ["__version__"]
