"""CMake-backed build for the cellci._core extension.

The C++ core is a plain CMake project; this shim configures it with SKBUILD=ON
(library + python module only) and drops the built module into the package.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).parent.resolve()
        # get_ext_fullpath already ends in .../cellci/_core<suffix>
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DSKBUILD=ON",
            "-DCMAKE_BUILD_TYPE=Release",
        ]
        try:
            import pybind11

            cmake_args.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass

        env = os.environ.copy()
        subprocess.run(["cmake", str(source_dir), *cmake_args], cwd=build_dir, env=env, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", f"-j{os.cpu_count() or 2}"],
            cwd=build_dir,
            env=env,
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("cellci._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
