"""Predict how long an experienced user needs to type a message on each
of the three built-in layouts, and inspect the per-step timeline."""

from keysim import MotorParams, builtin_layout, compare, predict_text, trace_csv

TEXT = "thanks for your dinner. take care."

params = MotorParams()
layouts = [builtin_layout(k) for k in ("qwert", "qwerty", "3x4")]

print(f"text: {TEXT!r}\n")
print(f"{'layout':<10}{'total_s':>10}{'wpm':>10}")
for row in compare(TEXT, layouts, params):
    print(f"{row.layout_name:<10}{row.total_s:>10.3f}{row.predicted_wpm:>10.3f}")

# Drill into the dual-gesture layout: the first few timed steps.
timeline = predict_text(TEXT, layouts[0], params)
print(f"\nfirst steps on {timeline.layout_name}:")
for line in trace_csv(timeline).splitlines()[:8]:
    print(" ", line)
