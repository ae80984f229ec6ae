"""distab: exact-arithmetic certification of distinguished abelian
subcategories of stable module categories over prime fields."""

__version__ = "0.1.0"
