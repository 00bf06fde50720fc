"""CLI constants and configuration."""

KINDS = ("all", "krasner", "hajos")
CHECKS = ("code", "class", "maximal", "factorization")
FORMATS = ("json", "text")
COROLLARIES = ("prime", "singleton", "omega2", "pair2")

EXIT_OK = 0
EXIT_PROPERTY_FALSE = 1
EXIT_PRECONDITION = 2
EXIT_PARSE = 3
EXIT_THEOREM_VIOLATION = 4

CONFIG_DIR = ".factorcodes"
CONFIG_FILENAME = "config.json"
CONFIG_ENV = "FACTORCODES_CONFIG"

PROG = "factorcodes"
DESCRIPTION = "Factorizations of cyclic groups, good arrangements and finite maximal codes."

EPILOG = """Exit codes:
  0  every requested property holds
  1  some requested property is false
  2  precondition, bound or budget failure
  3  input could not be parsed
  4  a guaranteed construction failed (reproduction bundle in the output)

Examples:
  factorcodes factorize 6 --kind hajos
  factorcodes check codes/aa_ab_b.txt
  factorcodes analyze codes/z6.txt --letter a --format text
  factorcodes scan --mode triangle --corpus-size 100 --seed 7"""
