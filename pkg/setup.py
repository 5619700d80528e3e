#!/usr/bin/env python

from setuptools import setup, find_packages
from os import path

DEDELAB_VERSION="0.9.0"


def get_file_contents(filename):
    fd = open(path.join(path.dirname(__file__), filename), "r")
    content = fd.read()
    fd.close()
    return content

setup(
    name = "dedelab",
    version = DEDELAB_VERSION,
    description = "Exact Dedekind sums and mean square values of L(1, chi).",
    long_description=get_file_contents("README.rst"),
    packages=find_packages(exclude=["tests"]),
    entry_points={
        'console_scripts': [
            'dedelab = dedelab.scripts:main'
        ]
    },
    python_requires = ">=3.8",
    install_requires = [
        "mpmath>=1.1",
        "numpy>=1.20",
    ],
    test_suite = "tests",
    classifiers=[
          'Development Status :: 4 - Beta',
          'Intended Audience :: Science/Research',
          'Operating System :: OS Independent',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
