from setuptools import setup, find_packages
import os

# Read version from package
version = {}
with open(os.path.join("schurbound", "__init__.py")) as f:
    exec(f.read(), version)

with open("README.md", "r", encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="schurbound",
    version=version["__version__"],  # Use version from __init__.py
    description="Dominance-order posets, Schur polynomials in Chern-class variables, and exact verification of Chern number lower bounds.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author=version["__author__"],
    license="AGPL-3.0-or-later",
    keywords="partitions dominance-order schur-polynomials pieri chern-classes combinatorics",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU Affero General Public License v3 or later (AGPLv3+)",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=find_packages(
        exclude=["tests*", ".internal*", ".venv*", "docs*", "examples*"]
    ),
    python_requires=">=3.8",
    install_requires=[
        "typer>=0.9.0",
        "rich>=13.0.0",
        "jinja2",
        "networkx>=2.6",
    ],
    extras_require={
        "dev": [
            "pytest",
            "pytest-cov",
            "hypothesis>=6.0",
            "flake8",
            "black",
            "isort",
            "mypy",
        ],
    },
    entry_points={
        "console_scripts": [
            "schurbound=schurbound.cli:main",
        ],
    },
    include_package_data=True,
    package_data={
        "schurbound": ["templates/*.j2"],  # Include template files
    },
    zip_safe=False,
)
