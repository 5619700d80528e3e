# -*- coding: utf-8 -*-
#
# dedelab documentation build configuration file.

import sys, os

sys.path.insert(0, os.path.abspath(os.path.join("..", "..")))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.mathjax']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'dedelab'
copyright = u'2026, dedelab developers'

version = '0.9'
release = '0.9.0'

exclude_patterns = []
pygments_style = 'sphinx'

autodoc_member_order = 'bysource'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'alabaster'
html_static_path = []
htmlhelp_basename = 'dedelabdoc'

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'dedelab', u'dedelab Documentation',
     [u'dedelab developers'], 1)
]
