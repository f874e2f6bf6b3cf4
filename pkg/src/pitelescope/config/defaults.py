"""Default configuration values."""

DEFAULT_CONFIG_YAML = """\
# pitelescope configuration
# Command-line flags take precedence over this file.

evaluation:
  digits: 10            # decimal digits requested by eval, verify and pi
  method: "richardson"  # or "direct" / "telescoped"

  # Richardson extrapolation of tau(n) at n = base, 2 base, 4 base, ...
  base: 16
  levels: null          # 2..16; null: min(14, max(4, ceil(0.6 digits) + 4))

  # Direct summation
  max_terms: 100000

  precision_bits: null  # null: ceil(digits * log2(10)) + 32
  tolerance_exp: null   # null: pass at 10^-digits

output:
  format: "text"        # or "json"

catalog:
  verify_precision_bits: 256
"""
