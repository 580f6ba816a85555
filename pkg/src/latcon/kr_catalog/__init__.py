"""Golden fixtures for the forbidden-lattice catalog."""
