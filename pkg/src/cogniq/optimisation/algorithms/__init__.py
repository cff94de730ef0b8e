"""Define the optimisation algorithms and the function to create them."""
