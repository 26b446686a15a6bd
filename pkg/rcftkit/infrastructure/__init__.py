"""Infrastructure layer: files, packaged data and logging handlers."""
