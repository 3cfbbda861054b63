# Symbol calculus computations and the page-facing get_*_data helpers
