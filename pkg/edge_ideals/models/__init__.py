from edge_ideals.models.documents import (
    BettiEntryDocument,
    CMReportDocument,
    ComplexDocument,
    GraphDocument,
    IdealDocument,
    ReasonDocument,
    VerdictDocument,
    WitnessDocument,
)
from edge_ideals.models.run_config import RunConfig
