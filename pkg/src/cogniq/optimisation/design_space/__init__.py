"""Define the variables of the parameter fits."""
