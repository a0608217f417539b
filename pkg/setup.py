#!/usr/bin/env python3

# python3 setup.py sdist --format=zip,gztar

from setuptools import setup
import os
import sys
import importlib.util

spec = importlib.util.spec_from_file_location('version', 'lib/version.py')
version = importlib.util.module_from_spec(spec)
spec.loader.exec_module(version)

if sys.version_info[:3] < (3, 10, 0):
    sys.exit("Error: gcover requires Python version >= 3.10.0...")

setup(
    name="gcover",
    version=version.GCOVER_VERSION,
    python_requires='>=3.10',
    install_requires=[
        'numpy',
        'sympy',
    ],
    extras_require={
        'test': ['pytest', 'hypothesis', 'coverage'],
    },
    packages=[
        'gcover',
        'gcover.tests',
    ],
    package_dir={
        'gcover': 'lib',
    },
    scripts=['gcover'],
    description="Covering numbers, maximal subgroups and Frattini quotients of finite groups",
    license="MIT Licence",
    long_description="""Covering numbers and Frattini quotients of finite soluble groups"""
)
