"""
Setup script for the rigidity package.
"""

import os
from setuptools import setup, find_packages

with open(os.path.join(os.path.dirname(__file__), 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

# Read version from version.py
version_file = os.path.join(os.path.dirname(__file__), 'rigidity', 'version.py')
with open(version_file) as f:
    exec(f.read())

setup(
    name="rigidity",
    version=get_pip_version() if 'get_pip_version' in locals() else "0.1.0",
    description="Exact decision of generic infinitesimal rigidity through balanced source-stream-sink orientations",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[
        "colorama>=0.4.0",  # For colored terminal output
        "networkx>=2.6",    # Orientation digraphs, cycles, graph generators
    ],
    extras_require={
        "dev": [
            "pytest",
            "pytest-cov",
            "sympy",
            "black",
            "flake8",
            "mypy",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "rigidity=rigidity.rigidity:main",
        ],
    },
)
