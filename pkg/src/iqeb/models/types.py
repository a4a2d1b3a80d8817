from typing import Annotated

from pydantic import Field

type Hartree = Annotated[float, "energy in Hartree"]
type Angstrom = Annotated[float, "bond length in Angstrom", Field(gt=0.0)]
