from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from edge_ideals import config

Command = Literal["analyze", "decompose", "power", "symbolic", "equality", "cm", "betti", "family", "sweep"]

# Commands that read a graph document
GRAPH_COMMANDS = {"analyze", "decompose", "power", "symbolic", "equality", "cm", "betti"}


class RunConfig(BaseModel):
    """Validated settings for one CLI invocation"""
    command: Command
    input_path: Optional[str] = Field(None, description="Graph JSON path, '-' for standard input")
    t: int = Field(1, ge=1, description="Power index")
    field: str = Field("q", description="Coefficient field: 'q' or 'gf:<p>'")
    verify: bool = Field(False, description="Run the brute-force oracle next to the structural test")
    k: int = Field(2, ge=1, description="Threshold family parameter")
    scan_to: int = Field(4, ge=1, description="Largest t scanned by the family command")
    max_box: int = Field(config.MAX_BOX_POINTS, ge=1, description="Colon-method box cap")
    max_lattice: int = Field(config.MAX_LATTICE_POINTS, ge=1, description="lcm-lattice cap for Betti tables")
    seed: Optional[int] = Field(None, description="Seed for random sweep instances")
    count: int = Field(0, ge=0, description="Number of random sweep instances")
    random_n: int = Field(5, ge=1, le=config.MAX_AMBIENT_VERTICES, description="Vertex count of random sweep instances")
    exhaustive: int = Field(0, ge=0, le=4, description="Exhaustive sweep over connected graphs up to this many vertices")
    workers: int = Field(1, ge=1, description="Sweep worker pool size")
    bundle_dir: str = Field("counterexamples", description="Where disagreement bundles are written")
    output_dir: Optional[str] = Field(None, description="Where sweep results are saved")

    @model_validator(mode="after")
    def _check_command_inputs(self):
        if self.command in GRAPH_COMMANDS and not self.input_path:
            raise ValueError(f"command `{self.command}` needs a graph input")
        if self.command == "equality" and self.t < 2:
            raise ValueError("`equality` needs --t >= 2")
        return self
