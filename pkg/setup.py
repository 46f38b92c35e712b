"""Build script.

The engine in ``src/tecc/_core.py`` is plain Python that also compiles cleanly
under Cython's pure-Python mode.  When Cython and a C toolchain are available we
build it as an extension module; the compiled ``_core`` then shadows the ``.py``
file at import time.  When they are not, the install is pure Python and behaves
identically (just slower).  ``tecc.engine_backend()`` reports which one loaded.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/tecc/_core.py"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - depends on build host
    print(f"tecc: building without compiled core ({exc!r})")

setup(ext_modules=ext_modules)
