"""Build glue for the optional compiled GF(2) kernel.

The package is pure Python; `clcc._gf2fast` is a Cython speedup for the
bit-matrix elimination used by the homology engine.  If Cython or a C
compiler is missing the extension is skipped and the pure-Python fallback
in `clcc.gf2` is used instead.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/clcc/_gf2fast.pyx"],
        language_level="3",
    )
except Exception as exc:  # pragma: no cover - environment dependent
    print(f"clcc: skipping compiled kernel ({exc!r}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
