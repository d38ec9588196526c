"""
A setuptools based setup module.

See:
https://packaging.python.org/en/latest/distributing.html
https://github.com/pypa/sampleproject
"""

from io import open
from os import path

# Always prefer setuptools over distutils
from setuptools import setup

HERE = path.abspath(path.dirname(__file__))
PKG_NAME = 'clique_spectra'

# Get the long description from the README file
with open(path.join(HERE, 'README.md'), encoding='utf-8') as readme_file:
    LONG_DESCRIPTION = readme_file.read()

VERSION = "0.1"
DESCRIPTION = (
    "Compute r-clique spectral radii of graphs and check extremal results "
    "about 2K_r-free graphs by exhaustive search"
)

SETUP_KWARGS = dict(
    name=PKG_NAME,
    version=VERSION,
    description=DESCRIPTION,
    long_description=LONG_DESCRIPTION,
    long_description_content_type='text/markdown',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    keywords='graph clique tensor spectral-radius extremal',
    packages=[PKG_NAME, PKG_NAME + '.cli'],
    python_requires='>=3.8',
    install_requires=[
        'configargparse',
        'networkx',
        'numpy',
        'tqdm',
    ],
    setup_requires=[
        "pytest-runner"
    ],
    tests_require=[
        'pytest',
    ],
    entry_points={  # Creates a console script entry point on install
        'console_scripts': [
            '{0}={0}.__main__:main'.format(PKG_NAME),
        ],
    },
)

setup(**SETUP_KWARGS)
