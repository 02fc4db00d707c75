"""Graph generators and verification campaigns."""

from .campaign import facts_campaign, probe_campaign, run_cells, tightness_campaign
from .generate import canonical_form, canonical_graph, enumerate_small_graphs, sample_min_degree_graphs
from .records import CampaignConfig, VerificationRecord, records_csv, records_json
from .verify import (
    StabilityReport,
    chi_lengths,
    figure1_data,
    figure1_rows,
    probe_theorem,
    stability_probe,
    theorem_delta_range,
    verify_tightness,
)

__all__ = [
    "CampaignConfig",
    "StabilityReport",
    "VerificationRecord",
    "canonical_form",
    "canonical_graph",
    "chi_lengths",
    "enumerate_small_graphs",
    "facts_campaign",
    "figure1_data",
    "figure1_rows",
    "probe_campaign",
    "probe_theorem",
    "records_csv",
    "records_json",
    "run_cells",
    "sample_min_degree_graphs",
    "stability_probe",
    "tightness_campaign",
    "theorem_delta_range",
    "verify_tightness",
]
