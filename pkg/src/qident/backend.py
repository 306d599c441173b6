"""Kernel selection: compiled convolution core when built, pure fallback."""

try:
    from qident._coeffcore import convolve, convolve_rational

    KERNEL_BACKEND = "c"
except ImportError:  # extension not built on this platform
    from qident._coeffcore_py import convolve, convolve_rational

    KERNEL_BACKEND = "python"

__all__ = ["convolve", "convolve_rational", "KERNEL_BACKEND"]
