# Spinor package
