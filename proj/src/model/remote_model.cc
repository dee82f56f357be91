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

#include "ratex/model/remote_model.h"

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include "ratex/common/errors.h"

namespace ratex::model {
namespace protocol {
namespace {

Json ParseLine(std::string_view line, const char* what) {
  try {
    return Json::parse(line);
  } catch (const Json::parse_error& e) {
    Fail(ErrorCode::kBackendError,
         std::string("malformed ") + what + " from bridge: " + e.what());
  }
}

void CheckId(const Json& msg, uint64_t expected_id) {
  if (!msg.is_object() || !msg.contains("id") || !msg["id"].is_number_unsigned() ||
      msg["id"].get<uint64_t>() != expected_id) {
    Fail(ErrorCode::kBackendError,
         "bridge response id mismatch (expected " +
             std::to_string(expected_id) + ")");
  }
  if (msg.contains("error")) {
    Fail(ErrorCode::kBackendError, "bridge error: " + msg["error"].dump());
  }
}

}  // namespace

Handshake ParseHandshake(std::string_view line) {
  const Json msg = ParseLine(line, "handshake");
  if (!msg.is_object() || !msg.contains("vocab_size") ||
      !msg.contains("model_name") || !msg.contains("compatibilized")) {
    Fail(ErrorCode::kBackendError, "handshake lacks required fields");
  }
  Handshake out;
  out.vocab_size = msg["vocab_size"].get<size_t>();
  out.model_name = msg["model_name"].get<std::string>();
  out.compatibilized = msg["compatibilized"].get<bool>();
  if (out.vocab_size == 0) {
    Fail(ErrorCode::kEmptyVocabulary, "bridge declared an empty vocabulary");
  }
  return out;
}

std::string EncodeHandshake(const Handshake& handshake) {
  return Json{{"vocab_size", handshake.vocab_size},
              {"model_name", handshake.model_name},
              {"compatibilized", handshake.compatibilized}}
      .dump();
}

std::string EncodeEvaluateRequest(uint64_t id, const ContextSubset& subset) {
  Json entries = Json::array();
  for (const ContextEntry& e : subset.entries()) {
    entries.push_back({e.position, e.token.value});
  }
  return Json{{"id", id},
              {"entries", std::move(entries)},
              {"target_pos", subset.target_position()}}
      .dump();
}

ContextSubset DecodeEvaluateRequest(const Json& request) {
  std::vector<ContextEntry> entries;
  for (const Json& pair : request.at("entries")) {
    entries.push_back({pair.at(0).get<size_t>(),
                       VocabId{pair.at(1).get<uint32_t>()}});
  }
  return ContextSubset(std::move(entries),
                       request.at("target_pos").get<size_t>());
}

Distribution DecodeEvaluateResponse(std::string_view line, uint64_t expected_id,
                                    size_t vocab_size) {
  const Json msg = ParseLine(line, "response");
  CheckId(msg, expected_id);
  std::vector<double> logprobs;
  try {
    logprobs = msg.at("logprobs").get<std::vector<double>>();
  } catch (const Json::exception&) {
    Fail(ErrorCode::kBackendError, "bridge response lacks finite log-probabilities");
  }
  if (logprobs.size() != vocab_size) {
    Fail(ErrorCode::kBackendError,
         "bridge returned " + std::to_string(logprobs.size()) +
             " log-probabilities for vocabulary of size " +
             std::to_string(vocab_size));
  }
  return Distribution::FromLogProbs(logprobs);
}

std::string EncodeTokenizeRequest(uint64_t id, std::string_view text) {
  return Json{{"id", id}, {"op", "tokenize"}, {"text", std::string(text)}}
      .dump();
}

TokenizeResult DecodeTokenizeResponse(std::string_view line,
                                      uint64_t expected_id, size_t text_size) {
  const Json msg = ParseLine(line, "tokenize response");
  CheckId(msg, expected_id);
  TokenizeResult out;
  size_t cursor = 0;
  try {
    for (uint32_t id : msg.at("ids").get<std::vector<uint32_t>>()) {
      out.ids.push_back(VocabId{id});
    }
    for (const Json& span : msg.at("spans")) {
      ByteSpan s{span.at(0).get<size_t>(), span.at(1).get<size_t>()};
      if (s.begin != cursor || s.end < s.begin) {
        Fail(ErrorCode::kBackendError, "tokenizer spans do not partition text");
      }
      cursor = s.end;
      out.spans.push_back(s);
    }
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kBackendError, std::string("malformed tokenize response: ") + e.what());
  }
  if (cursor != text_size || out.spans.size() != out.ids.size()) {
    Fail(ErrorCode::kBackendError, "tokenizer spans do not cover text");
  }
  return out;
}

}  // namespace protocol

namespace {

std::string ReadLine(FILE* in) {
  std::string line;
  int c;
  while ((c = std::fgetc(in)) != EOF && c != '\n') line.push_back(static_cast<char>(c));
  if (c == EOF && line.empty()) {
    Fail(ErrorCode::kBackendError, "bridge closed its output stream");
  }
  return line;
}

}  // namespace

RemoteModel::RemoteModel(int pid, FILE* to_child, FILE* from_child)
    : pid_(pid), to_child_(to_child), from_child_(from_child) {}

std::unique_ptr<RemoteModel> RemoteModel::Launch(const std::string& command) {
  // A bridge that dies mid-request must surface as an error, not a signal.
  signal(SIGPIPE, SIG_IGN);
  int to_child[2];
  int from_child[2];
  if (pipe(to_child) != 0 || pipe(from_child) != 0) {
    Fail(ErrorCode::kBackendError, "cannot create pipes for bridge");
  }
  const pid_t pid = fork();
  if (pid < 0) Fail(ErrorCode::kBackendError, "cannot fork bridge process");
  if (pid == 0) {
    dup2(to_child[0], STDIN_FILENO);
    dup2(from_child[1], STDOUT_FILENO);
    close(to_child[0]);
    close(to_child[1]);
    close(from_child[0]);
    close(from_child[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(to_child[0]);
  close(from_child[1]);
  std::unique_ptr<RemoteModel> model(new RemoteModel(
      pid, fdopen(to_child[1], "w"), fdopen(from_child[0], "r")));
  model->handshake_ = protocol::ParseHandshake(ReadLine(model->from_child_));
  return model;
}

RemoteModel::~RemoteModel() {
  if (to_child_) std::fclose(to_child_);
  if (from_child_) std::fclose(from_child_);
  if (pid_ > 0) {
    int status = 0;
    if (waitpid(pid_, &status, WNOHANG) == 0) {
      kill(pid_, SIGTERM);
      waitpid(pid_, &status, 0);
    }
  }
}

std::string RemoteModel::RoundTrip(const std::string& request) const {
  if (std::fputs(request.c_str(), to_child_) < 0 ||
      std::fputc('\n', to_child_) == EOF || std::fflush(to_child_) != 0) {
    Fail(ErrorCode::kBackendError, "cannot write to bridge");
  }
  return ReadLine(from_child_);
}

Distribution RemoteModel::DoEvaluate(const ContextSubset& subset) const {
  std::lock_guard<std::mutex> lock(mutex_);
  const uint64_t id = next_id_++;
  const std::string line =
      RoundTrip(protocol::EncodeEvaluateRequest(id, subset));
  return protocol::DecodeEvaluateResponse(line, id, handshake_.vocab_size);
}

protocol::TokenizeResult RemoteModel::Tokenize(std::string_view text) const {
  std::lock_guard<std::mutex> lock(mutex_);
  const uint64_t id = next_id_++;
  const std::string line = RoundTrip(protocol::EncodeTokenizeRequest(id, text));
  return protocol::DecodeTokenizeResponse(line, id, text.size());
}

}  // namespace ratex::model
