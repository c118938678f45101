//! Recorded simulation trajectories.
//!
//! A [`Trajectory`] is the full record of one simulated run: a time-ordered
//! list of events, each carrying the post-event public belief, aggregate
//! play, designer target, and the revision flow in force until the next
//! event. Beliefs are shared via `Arc` because long finite-population runs
//! record many clock ticks that leave the belief untouched.
//!
//! The record ends at `horizon` with a [`TailKind`] describing the flow
//! regime that continues beyond it, so discounted functionals can add the
//! exact closed-form tail instead of truncating.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::belief::Belief;
use crate::paths::Flow;

/// What happened at a recorded event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EventKind {
    /// Initial condition at `t = 0`.
    Start,
    /// A two-sided corrective disclosure.
    Injection,
    /// An escape disclosure posted from the lower-dominance region.
    Jump,
    /// A revision clock tick that changed aggregate play (finite mode).
    ClockTick,
    /// A change of revision flow without disclosure (profile switch).
    FlowChange,
    /// End of the recorded window.
    End,
}

impl std::fmt::Display for EventKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            EventKind::Start => "start",
            EventKind::Injection => "injection",
            EventKind::Jump => "jump",
            EventKind::ClockTick => "clock-tick",
            EventKind::FlowChange => "flow-change",
            EventKind::End => "end",
        };
        write!(f, "{s}")
    }
}

/// Flow regime in force beyond the recorded horizon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TailKind {
    /// Everyone revising switches up after the horizon.
    UpperFlow,
    /// Everyone revising switches down after the horizon.
    LowerFlow,
    /// Aggregate play is frozen after the horizon.
    Freeze,
}

/// One recorded event.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrajEvent {
    /// Event time.
    pub t: f64,
    /// Public belief immediately after the event.
    pub belief: Arc<Belief>,
    /// Aggregate play immediately after the event.
    pub play: f64,
    /// Designer's running target immediately after the event.
    pub target: f64,
    /// What happened.
    pub kind: EventKind,
    /// Revision flow in force from this event until the next one.
    pub flow_after: Flow,
}

/// A complete simulated run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Trajectory {
    pub events: Vec<TrajEvent>,
    /// RNG seed that generated the run (0 for deterministic runs).
    pub seed: u64,
    /// End of the recorded window.
    pub horizon: f64,
    /// Poisson revision rate (needed to integrate segments).
    pub switch_rate: f64,
    /// Flow regime continuing beyond the horizon.
    pub tail: TailKind,
}

impl Trajectory {
    /// Validated constructor: events must be time-ordered within
    /// `[0, horizon]`, starting with a `Start` event at `t = 0`.
    pub fn new(
        events: Vec<TrajEvent>,
        seed: u64,
        horizon: f64,
        switch_rate: f64,
        tail: TailKind,
    ) -> Result<Self, crate::GameError> {
        if events.is_empty() {
            return Err(crate::GameError::domain(
                "trajectory needs at least a start event".to_string(),
            ));
        }
        if events[0].kind != EventKind::Start || events[0].t != 0.0 {
            return Err(crate::GameError::domain(
                "trajectory must begin with a start event at t = 0".to_string(),
            ));
        }
        if !(horizon.is_finite() && horizon >= 0.0) {
            return Err(crate::GameError::domain(format!(
                "horizon must be finite and non-negative, got {horizon}"
            )));
        }
        for w in events.windows(2) {
            if w[1].t < w[0].t {
                return Err(crate::GameError::domain(format!(
                    "events out of order: t = {} before t = {}",
                    w[0].t, w[1].t
                )));
            }
        }
        if events[events.len() - 1].t > horizon + 1e-12 {
            return Err(crate::GameError::domain(
                "events extend beyond the horizon".to_string(),
            ));
        }
        Ok(Trajectory {
            events,
            seed,
            horizon,
            switch_rate,
            tail,
        })
    }

    /// Aggregate play at the end of the recorded window.
    pub fn final_play(&self) -> f64 {
        let last = &self.events[self.events.len() - 1];
        last.flow_after
            .advance(last.play, self.switch_rate, self.horizon - last.t)
    }

    /// Belief at the end of the recorded window.
    pub fn final_belief(&self) -> &Belief {
        &self.events[self.events.len() - 1].belief
    }

    /// Number of disclosure events (injections plus jumps).
    pub fn disclosure_count(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e.kind, EventKind::Injection | EventKind::Jump))
            .count()
    }

    /// Aggregate play at an arbitrary time `t ∈ [0, horizon]`, reconstructed
    /// from the event record.
    pub fn play_at(&self, t: f64) -> f64 {
        debug_assert!((0.0..=self.horizon + 1e-12).contains(&t));
        // Find the last event at or before t.
        let idx = match self
            .events
            .binary_search_by(|e| e.t.partial_cmp(&t).expect("finite event times"))
        {
            Ok(mut i) => {
                // Several events can share a timestamp; take the last one.
                while i + 1 < self.events.len() && self.events[i + 1].t == t {
                    i += 1;
                }
                i
            }
            Err(0) => 0,
            Err(i) => i - 1,
        };
        let e = &self.events[idx];
        e.flow_after.advance(e.play, self.switch_rate, (t - e.t).max(0.0))
    }
}
