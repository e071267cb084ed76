"""zcverify: exact-arithmetic verification of the Zassenhaus conjecture for
small groups via HeLP+ constraints and an elimination battery."""

__version__ = "0.1.0"
