# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath('../../project/susy_delta_arrays/susy_algorithms/'))

# -- Project information -----------------------------------------------------

project = 'Supersymmetric Dirac delta arrays'
copyright = '2026, Juan Camilo Henao Londono'
author = 'Juan Camilo Henao Londono'

# The short X.Y version
version = ''
# The full version, including alpha/beta/rc tags
release = '1.0.0'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = []
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
htmlhelp_basename = 'Supersymmetricdiracdeltaarraysdoc'

# -- Options for LaTeX output ------------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'supersymmetricdiracdeltaarrays.tex',
     'Supersymmetric Dirac delta arrays Documentation',
     'Juan Camilo Henao Londono', 'manual'),
]

# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'supersymmetricdiracdeltaarrays',
     'Supersymmetric Dirac delta arrays Documentation',
     [author], 1)
]

# -- Options for Texinfo output ----------------------------------------------

texinfo_documents = [
    (master_doc, 'supersymmetricdiracdeltaarrays',
     'Supersymmetric Dirac delta arrays Documentation',
     author, 'supersymmetricdiracdeltaarrays',
     'Supersymmetric quantum mechanics of Dirac delta arrays.',
     'Miscellaneous'),
]

# -- Extension configuration -------------------------------------------------

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable/', None),
                       'scipy': ('https://docs.scipy.org/doc/scipy/', None)}
