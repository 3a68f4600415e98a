#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from setuptools import setup, find_packages
from pathlib import Path

setup(
    name="stokes",
    description="Newton polygons, Stokes words and Dynkin graph configurations of plane curve singularities.",
    version="0.1.0",
    long_description=Path("README.md").read_text(),
    long_description_content_type='text/markdown',
    keywords='singularities, stokes-phenomenon, braids, bipartite-graphs, python',
    packages=find_packages(include=["stokes", "stokes.*"]),
    py_modules=["cli"],
    entry_points={
        'console_scripts': ['stokes=cli:run'],
    },
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3.7',
    ],
    install_requires=["graphviz", "sympy", "numpy", "matplotlib", "networkx"],
    python_requires='>=3.7',
)
