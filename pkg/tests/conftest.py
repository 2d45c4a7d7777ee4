"""Anchors the tests directory on sys.path so `oracles` imports cleanly."""
