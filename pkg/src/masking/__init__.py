"""
.. automodule:: src.masking.masks
    :members:
"""
from .masks import MaskMode, MaskModel, MaskedRow, MaskSampler, MaskEnumeration, apply_mask, sample_masked_row, \
    enumerate_masks, ENUMERATION_GUARD
