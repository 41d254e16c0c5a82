# Simple usage example

from maneuver_verifier.core import load_scenario_file, run_pipeline
from maneuver_verifier.utils import VerifierConfig, setup_logging


def main():
    """Verify the overtaking scene with and without congestion"""

    setup_logging("INFO")
    scenario = load_scenario_file("scenarios/overtaking.yaml")

    print("Maneuver Verifier - Simple Example")
    print("=" * 40)

    for congested in (False, True):
        report = run_pipeline(scenario, VerifierConfig(congested_override=congested))
        print(
            f"congested={congested}: {len(report.satisfying)} of "
            f"{len(report.results)} traces satisfy {[r.name for r in report.rules]}"
        )

    best = report.dijkstra
    print(f"Dijkstra: {' -> '.join(best.signatures)} (cost {best.cost:g})")


if __name__ == "__main__":
    main()
