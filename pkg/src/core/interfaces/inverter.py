"""
Inverter interface for interchangeable transform-inversion methods.
"""
from abc import ABC, abstractmethod
from typing import Callable, Optional, Tuple

from ..models.spectral_function import SpectralFunction


class ISpectralInverter(ABC):
    """Interface for methods reconstructing a function from its transform."""

    @abstractmethod
    def invert(
        self,
        transform: SpectralFunction,
        interval: Tuple[float, float]
    ) -> Callable:
        """
        Reconstruct the function on an interval.

        Args:
            transform: Transform of the function to recover
            interval: Recovery interval (a, b)

        Returns:
            Vectorized approximation x -> f(x) (an expansion object)

        Raises:
            NumericalError: If the reconstruction produces non-finite values
        """
        pass

    @abstractmethod
    def get_method_label(self) -> str:
        """Get the label of the method (WAi-j, COS-N)."""
        pass

    def describe(self) -> Optional[dict]:
        """Method parameters for report metadata."""
        return None
