"""Polynomials with Galois groups fixed by sympy's galois_group (re-checked in test_galois_id)."""

FIXTURE_GROUPS = {
    3: {
        "x^3-3x-1": "A3", "x^3-3x+1": "A3", "x^3+x^2-2x-1": "A3",
        "x^3-7x-7": "A3", "x^3-x^2-9x+1": "A3", "x^3-21x-35": "A3",
        "x^3-2": "S3", "x^3-x-1": "S3", "x^3+x+1": "S3",
        "x^3-3": "S3", "x^3+2x+1": "S3", "x^3-5": "S3",
    },
    4: {
        "x^4+x^3+x^2+x+1": "Z4", "x^4-4x^2+2": "Z4", "x^4-5x^2+5": "Z4", "x^4+4x^2+2": "Z4",
        "x^4+1": "Z2xZ2", "x^4-10x^2+1": "Z2xZ2", "x^4-x^2+1": "Z2xZ2", "x^4+3x^2+1": "Z2xZ2",
        "x^4-2": "D4", "x^4-3": "D4", "x^4+2": "D4", "x^4-7x^2+7": "D4",
        "x^4+8x+12": "A4", "x^4-8x+12": "A4", "x^4-12x^2+8x+9": "A4",
        "x^4+x+1": "S4", "x^4-x-1": "S4", "x^4+2x+2": "S4",
    },
    5: {
        "x^5+x^4-4x^3-3x^2+3x+1": "Z5", "x^5-11x^3+22x-11": "Z5", "x^5-10x^3+5x^2+10x+1": "Z5",
        "x^5-5x+12": "D5", "x^5+3x^2+2x-1": "D5", "x^5-5x^2-3": "D5",
        "x^5-2": "Hol(Z5)", "x^5-3": "Hol(Z5)", "x^5+15x+12": "Hol(Z5)",
        "x^5+20x+16": "A5", "x^5-x^2-2x-3": "A5",
        "x^5-x-1": "S5", "x^5-x+1": "S5", "x^5+x+3": "S5", "x^5-4x+2": "S5",
    },
}

SYMPY_TO_TABLE = {"A3": "A3", "S3": "S3", "C4": "Z4", "V": "Z2xZ2", "D4": "D4", "A4": "A4", "S4": "S4",
                  "C5": "Z5", "D5": "D5", "M20": "Hol(Z5)", "A5": "A5", "S5": "S5"}

ALL_FIXTURES = [(text, group) for by_degree in FIXTURE_GROUPS.values() for text, group in by_degree.items()]
