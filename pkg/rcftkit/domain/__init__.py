"""Domain layer: pure computation on numpy arrays and exact integers, no I/O."""
