# Spectrum package
