// Copyright 2026 The Ratex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RATEX_MODEL_REMOTE_MODEL_H_
#define RATEX_MODEL_REMOTE_MODEL_H_

#include <cstdint>
#include <cstdio>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "ratex/common/json_io.h"
#include "ratex/model/code_tokenizer.h"
#include "ratex/model/language_model.h"

namespace ratex::model {

// Environment variable naming the command that launches a model bridge.
inline constexpr const char* kRemoteBackendEnv = "RATEX_REMOTE_BACKEND";

// Newline-delimited JSON protocol spoken with an external model bridge.
//
//   bridge -> {"vocab_size": N, "model_name": "...", "compatibilized": b}
//   client -> {"id": k, "entries": [[pos, tok], ...], "target_pos": t}
//   bridge -> {"id": k, "logprobs": [N numbers]}   or {"id": k, "error": "..."}
//   client -> {"id": k, "op": "tokenize", "text": "..."}
//   bridge -> {"id": k, "ids": [...], "spans": [[begin, end], ...]}
namespace protocol {

struct Handshake {
  size_t vocab_size = 0;
  std::string model_name;
  bool compatibilized = false;
};

struct TokenizeResult {
  std::vector<VocabId> ids;
  std::vector<ByteSpan> spans;
};

Handshake ParseHandshake(std::string_view line);
std::string EncodeHandshake(const Handshake& handshake);
std::string EncodeEvaluateRequest(uint64_t id, const ContextSubset& subset);
ContextSubset DecodeEvaluateRequest(const Json& request);
Distribution DecodeEvaluateResponse(std::string_view line, uint64_t expected_id,
                                    size_t vocab_size);
std::string EncodeTokenizeRequest(uint64_t id, std::string_view text);
TokenizeResult DecodeTokenizeResponse(std::string_view line,
                                      uint64_t expected_id, size_t text_size);

}  // namespace protocol

// Backend served by an external process over standard streams. Requests are
// serialized under a mutex so responses stay id-matched.
class RemoteModel : public LanguageModel {
 public:
  // Runs `command` through /bin/sh and reads the handshake.
  static std::unique_ptr<RemoteModel> Launch(const std::string& command);
  ~RemoteModel() override;

  RemoteModel(const RemoteModel&) = delete;
  RemoteModel& operator=(const RemoteModel&) = delete;

  size_t vocab_size() const override { return handshake_.vocab_size; }
  std::string name() const override { return "remote(" + handshake_.model_name + ")"; }
  const protocol::Handshake& handshake() const { return handshake_; }

  protocol::TokenizeResult Tokenize(std::string_view text) const;

 protected:
  Distribution DoEvaluate(const ContextSubset& subset) const override;

 private:
  RemoteModel(int pid, FILE* to_child, FILE* from_child);
  std::string RoundTrip(const std::string& request) const;

  int pid_;
  FILE* to_child_;
  FILE* from_child_;
  protocol::Handshake handshake_;
  mutable std::mutex mutex_;
  mutable uint64_t next_id_ = 1;
};

}  // namespace ratex::model

#endif  // RATEX_MODEL_REMOTE_MODEL_H_
