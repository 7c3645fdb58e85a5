"""Digit-indexed q-ary error-correcting codes."""
