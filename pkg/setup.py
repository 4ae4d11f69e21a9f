# -*- coding: utf-8 -*-
# flake8: noqa

"""Installation script."""


#------------------------------------------------------------------------------
# Imports
#------------------------------------------------------------------------------

import os
import os.path as op
from pathlib import Path
import re

from setuptools import setup


#------------------------------------------------------------------------------
# Setup
#------------------------------------------------------------------------------

def _package_tree(pkgroot):
    path = op.dirname(__file__)
    subdirs = [op.relpath(i[0], path).replace(op.sep, '.')
               for i in os.walk(op.join(path, pkgroot))
               if '__init__.py' in i[2]]
    return subdirs


readme = (Path(__file__).parent / 'README.md').read_text()


# Find version number from `__init__.py` without executing it.
with (Path(__file__).parent / 'fittlib/__init__.py').open('r') as f:
    version = re.search(r"__version__ = '([^']+)'", f.read()).group(1)


with (Path(__file__).parent / 'requirements.txt').open('r') as f:
    requirements = [line.strip() for line in f if line.strip()]


setup(
    name='fittlib',
    version=version,
    license="BSD",
    description='Exact Fitting ideals over group rings of finite abelian p-groups',
    long_description=readme,
    long_description_content_type='text/markdown',
    packages=_package_tree('fittlib'),
    package_dir={'fittlib': 'fittlib'},
    install_requires=requirements,
    entry_points={
        'console_scripts': [
            'fittlib=fittlib.cli.report:main',
        ],
    },
    include_package_data=True,
    keywords='fitting ideal,group ring,iwasawa algebra,free resolution,computer algebra',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
    ],
)
