#!/usr/bin/env python
"""
thermodarboux
Thermodynamic oscillator actions, their Darboux families and noise spectra
"""

from setuptools import setup, find_packages
from pathlib import Path

# Read the contents of README file
this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text()

setup(
    name="thermodarboux",
    version="0.1.0",
    author="thermodarboux developers",
    description="Thermodynamic oscillator actions, Darboux families and Nyquist-Johnson spectra",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Physics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
    python_requires=">=3.10",
    install_requires=[
        "numpy>=1.24.0",
        "scipy>=1.10.0",
        "pydantic>=2.0.0",
        "pyyaml>=6.0.1",
        "python-dotenv>=1.0.0",
        "coloredlogs>=15.0.1",
    ],
    extras_require={
        "dev": [
            "pytest>=7.4.0",
            "pytest-cov>=4.1.0",
            "pytest-mock>=3.12.0",
            "black>=23.0.0",
            "flake8>=6.0.0",
            "mypy>=1.5.0",
            "isort>=5.12.0",
            "jsonschema>=4.18.0",
        ],
        "plot": [
            "matplotlib>=3.7.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "thermodarboux=thermodarboux.cli:main",
        ],
    },
    include_package_data=True,
    package_data={
        "": ["config/*.yaml", "schema/*.json"],
    },
    keywords="thermodynamics riccati darboux planck nyquist-johnson negative-temperature",
)
