# -*- coding: utf-8 -*-
#
# fastperc documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('../../'))

from fastperc._version import VERSION  # noqa: E402


# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'fastperc'
copyright = '2024, fastperc developers'
author = 'fastperc developers'

version = VERSION
release = VERSION

language = None

exclude_patterns = []

pygments_style = 'sphinx'


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_static_path = ['_static']

htmlhelp_basename = 'fastpercdoc'


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'fastperc', 'fastperc Documentation',
     [author], 1)
]


intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
    'numba': ('https://numba.readthedocs.io/en/stable', None),
}
