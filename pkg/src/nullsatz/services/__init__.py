"""Decision procedures built on the algebra kernel."""
