# -*- coding: utf-8 -*-
#
# dfphoton documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# The package lives two directories up
sys.path.insert(0, os.path.abspath('../../'))
import dfphoton

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'dfphoton'
copyright = u'2026, The dfphoton developers'

version = dfphoton.__version__
release = version

exclude_patterns = []
pygments_style = 'manni'

# -- Options for HTML output ----------------------------------------------

import sphinx_rtd_theme
html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = ['_static']
htmlhelp_basename = 'dfphotondoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'dfphoton', u'dfphoton Documentation',
     [u'The dfphoton developers'], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}
