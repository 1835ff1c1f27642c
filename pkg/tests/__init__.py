"""padic-ell tests: pytest modules per package, plus the end-to-end harnesses."""
