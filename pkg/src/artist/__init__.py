"""Text simplification workbench: segmentation, readability metrics,
BLEU/SARI evaluation, faithfulness diagnostics, and pluggable backends."""

__version__ = "0.1.0"
