"""Fit the model's free timing constants so that its predictions hit
observed totals for the same message on all three layouts."""

from keysim import MotorParams, Observation, builtin_layout, calibrate, predict_text

TEXT = "thanks for your dinner. take care."
OBSERVED_S = {"qwerty": 16.628, "3x4": 19.318, "qwert": 10.061}

observations = [
    Observation(TEXT, builtin_layout(name), seconds * 1000.0)
    for name, seconds in OBSERVED_S.items()
]
free = ["think_qwerty", "think_qwert", "think_3x4", "tap_cost", "slide_extra"]

fitted, report = calibrate(observations, free, MotorParams())

print(f"residual: {report.initial_residual:.1f} -> {report.final_residual:.6f} "
      f"(ms^2, {report.sweeps} sweeps)\n")
for name in free:
    print(f"  {name:<14} {getattr(fitted, name):10.3f} ms")
print()
for obs in observations:
    predicted = predict_text(obs.text, obs.layout, fitted).total_s
    print(f"  {obs.layout.name:<8} predicted {predicted:7.3f} s   "
          f"observed {obs.observed_ms / 1000.0:7.3f} s")
