# -*- coding: utf-8 -*-
#
# scckit documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'scckit'
copyright = u'2026, the scckit authors'

with open(os.path.join(os.path.dirname(__file__), '..', 'version.txt')) as fp:
    # The full version, including alpha/beta/rc tags.
    release = fp.read().strip()
# The short X.Y version.
version = '.'.join(release.split('.')[:2])

exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

html_theme = 'default'
html_static_path = []
htmlhelp_basename = 'scckitdoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'scckit', u'scckit Documentation', [u'the scckit authors'], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
