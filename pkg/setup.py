#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Setup script para a biblioteca DiophTools
"""

from setuptools import setup, find_packages

# Ler o SPEC_FULL para a descrição longa
def read_file(filename):
    """Lê arquivo e retorna seu conteúdo"""
    try:
        with open(filename, 'r', encoding='utf-8') as f:
            return f.read()
    except FileNotFoundError:
        return ""

# Informações da versão
VERSION = "0.1.0"

# Dependências principais
INSTALL_REQUIRES = [
    "numpy>=1.20.0",
    "numba>=0.54.0",
    "pandas>=1.5.0",
    "tqdm>=4.60.0",
]

# Dependências opcionais para desenvolvimento
EXTRAS_REQUIRE = {
    'dev': [
        'pytest>=6.0.0',
        'pytest-cov>=2.10.0',
        'pytest-xdist>=2.2.0',
        'flake8>=3.8.0',
    ],
}

# Todas as dependências extras
EXTRAS_REQUIRE['all'] = list(set(
    dep for deps in EXTRAS_REQUIRE.values() for dep in deps
))

setup(
    name="DiophTools",
    version=VERSION,
    author="Desenvolvedor DiophTools",
    description="Laboratório numérico para sequências escolhidas de numeradores e aproximação diofantina em primos",
    long_description=read_file("SPEC_FULL.md"),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["examples", "examples.*"]),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
    install_requires=INSTALL_REQUIRES,
    extras_require=EXTRAS_REQUIRE,
    entry_points={
        "console_scripts": [
            "chosennum=DiophTools.bin.cli:main",
        ]
    },
    zip_safe=False,
    test_suite="DiophTools.tests",
    license="Apache-2.0",
    platforms=["any"],
    keywords=[
        "number theory",
        "diophantine approximation",
        "primes",
        "sieve",
        "exponential sums",
    ],
)
