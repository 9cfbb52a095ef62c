
# This is the authoritative version number which should be used everywhere,
# including packaging, documentation generation and CSV provenance.
#
# Normally, this should be available as fastperc.__version__
VERSION = '2024.1'
