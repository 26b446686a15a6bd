"""Application layer: services and ports, depends on domain only."""
