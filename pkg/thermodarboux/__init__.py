"""thermodarboux main package."""

__version__ = "0.1.0"
__author__ = "thermodarboux developers"
__description__ = "Thermodynamic oscillator actions, their Darboux families and noise spectra"
