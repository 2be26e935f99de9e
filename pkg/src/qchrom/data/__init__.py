"""Optional packaged graph fixtures (graph6 files) used by the survey table.

A fixture named ``<name>.g6`` placed in this directory shows up as an extra
table row; absent fixtures are skipped silently.
"""
