"""Exact braid-closure invariants: Burau traces, RT blocks, and sutured annular Khovanov homology."""
