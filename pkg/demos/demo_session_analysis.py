"""Round-trip a simulated typing session through the session-log format
and the transcriber, then aggregate a small learning curve."""

import dataclasses

from keysim import (MotorParams, builtin_layout, aggregate_sessions,
                    predict_text, synthesize_session_log, transcribe_session)

layout = builtin_layout("qwert")
params = MotorParams()

# Simulate three "sessions" of the same stimulus at different speeds and
# replay each as a pointer-event log, as the browser harness would record.
stimulus = "hey you, take care."
results = []
for session_index, think in enumerate([500.0, 350.0, 200.0], start=1):
    timeline = predict_text(stimulus, layout, params.with_values(think_qwert=think))
    log = synthesize_session_log(timeline, layout, stimulus=stimulus,
                                 session_index=session_index)
    log = dataclasses.replace(log, subject_id="demo")
    result = transcribe_session(log, layout)
    results.append((log, result))
    print(f"session {session_index}: transcribed {result.transcribed!r} "
          f"wpm={result.wpm:.2f} errors={result.error_distance}")

print("\nlearning curve:")
for p in aggregate_sessions(results):
    print(f"  session {p.session_index}: mean {p.mean_wpm:.2f} wpm "
          f"(sd {p.stddev_wpm:.2f}, n={p.n})")
