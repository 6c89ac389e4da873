# -*- coding: utf-8 -*-
#
# optrig documentation build configuration file.

extensions = []
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'optrig'
copyright = u'2026, optrig developers'

# The short X.Y version.
version = '1.0'
# The full version, including alpha/beta/rc tags.
release = '1.0.0'

exclude_trees = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'optrigdoc'

latex_documents = [
  ('index', 'optrig.tex', u'optrig Documentation',
   u'optrig developers', 'manual'),
]
