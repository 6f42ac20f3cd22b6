#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hmp/chat.hpp"
#include "hmp/rng.hpp"
#include "hmp/skills.hpp"
#include "hmp/world.hpp"

namespace hmp {

// One observation: a ground-truth snapshot and, when a camera is attached,
// the matching image.
struct Frame {
  std::int64_t tick = 0;
  std::shared_ptr<const WorldState> state;
  std::optional<std::string> image_path;
};

// Observation history, ordered by tick. It may be sparse: the observation at
// tick t is the last frame with tick <= t.
using History = std::vector<Frame>;

struct Snippet {
  std::vector<Frame> frames;  // time-ordered, frames[i].tick is the sample tick
  double t_start = 0.0;       // seconds
  double t_end = 0.0;

  std::size_t count() const { return frames.size(); }
};

struct MonitorConfig {
  std::int64_t period_ticks = kTicksPerSecond;  // 1.0 s
  double span_s = 1.5;
  int min_frames = 10;
  int max_frames = 15;

  void validate() const;  // throws ConfigError
};

// Even sampling of k frames over [now - span, now], endpoints included.
// Nominal sample times are rounded to the nearest tick.
// Throws InsufficientHistory when the history starts after now - span.
Snippet sample_snippet(const History& history, std::int64_t now_tick, int k, double span_s = 1.5);
// Draws k uniformly from [min_frames, max_frames].
Snippet sample_snippet(const History& history, std::int64_t now_tick, const MonitorConfig& config, Rng& rng);

// Earliest tick at which a snippet ending at `now` can be sampled from a
// history starting at `first_tick`.
std::int64_t first_sampleable_tick(std::int64_t first_tick, double span_s);

enum class VerdictStatus { completed, in_progress };
enum class MonitorBackendKind { oracle, remote, mock };

std::string_view to_string(VerdictStatus s);
std::string_view to_string(MonitorBackendKind k);

struct MonitorVerdict {
  VerdictStatus status = VerdictStatus::in_progress;
  std::string question;
  std::int64_t at = 0;  // tick the verdict applies to
  MonitorBackendKind backend = MonitorBackendKind::oracle;
  bool flipped = false;  // error injection changed the verdict
  std::string note;      // transport warnings and similar
};

struct MonitorErrorModel {
  double false_complete_rate = 0.0;
  double false_inprogress_rate = 0.0;
  std::uint64_t seed = 0;

  void validate() const;  // throws ConfigError
};

// Completed iff every symbolic effect of the step holds in the final frame,
// then flipped with the configured rates. Exactly one draw from `rng` per
// call so verdict sequences are reproducible.
MonitorVerdict verify_oracle(const GroundedStep& step, const Snippet& snippet, const MonitorErrorModel& errors,
                             Rng& rng);

// Leading "yes" or "completed", case-insensitive.
bool is_affirmative(std::string_view answer);

// Asks the chat model the step's question about the snippet. Image frames are
// attached; symbolic frames are rendered as text. A transport failure is
// retried once, then reported as in_progress with a note.
MonitorVerdict verify_remote(const GroundedStep& step, const Snippet& snippet, ChatClient& client,
                             MonitorBackendKind kind = MonitorBackendKind::remote);

std::string render_snippet_text(const Snippet& snippet);

class MonitorBackend {
 public:
  virtual ~MonitorBackend() = default;
  virtual MonitorVerdict verify(const GroundedStep& step, const Snippet& snippet) = 0;
  virtual MonitorBackendKind kind() const = 0;
};

class OracleMonitor : public MonitorBackend {
 public:
  explicit OracleMonitor(MonitorErrorModel errors) : errors_(errors), rng_(errors.seed) { errors_.validate(); }
  MonitorVerdict verify(const GroundedStep& step, const Snippet& snippet) override {
    return verify_oracle(step, snippet, errors_, rng_);
  }
  MonitorBackendKind kind() const override { return MonitorBackendKind::oracle; }

 private:
  MonitorErrorModel errors_;
  Rng rng_;
};

class RemoteMonitor : public MonitorBackend {
 public:
  RemoteMonitor(std::shared_ptr<ChatClient> client, MonitorBackendKind kind)
      : client_(std::move(client)), kind_(kind) {}
  MonitorVerdict verify(const GroundedStep& step, const Snippet& snippet) override {
    return verify_remote(step, snippet, *client_, kind_);
  }
  MonitorBackendKind kind() const override { return kind_; }

 private:
  std::shared_ptr<ChatClient> client_;
  MonitorBackendKind kind_;
};

}  // namespace hmp
