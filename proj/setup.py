import os
import shutil
import subprocess
import sys
from glob import glob
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name, sourcedir=""):
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        ext_fullpath = Path.cwd() / self.get_ext_fullpath(ext.name)
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DPATHRES_BUILD_TESTS=OFF",
        ]
        subprocess.run(["cmake", ext.sourcedir, *cmake_args],
                       cwd=build_temp, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core",
             "-j", str(os.cpu_count() or 2)],
            cwd=build_temp, check=True)

        built = glob(str(build_temp / "python" / "pathres" / "_core.*"))
        if not built:
            raise RuntimeError("cmake did not produce the _core module")
        ext_fullpath.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], ext_fullpath)


setup(
    packages=["pathres"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("pathres._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
