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

#include "ratex/concepts/pos_tagger.h"

#include <array>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace ratex::concepts {
namespace {

constexpr std::array<std::string_view, 10> kTagset = {
    kPosNoun, kPosVerb, kPosAdjective, kPosParticle, kPosModal,
    kPosConjunction, kPosPronoun, kPosDeterminer, kPosList, kPosOther};

struct Lexicon {
  std::unordered_map<std::string, std::string_view> tags;
  std::unordered_set<std::string> noun_verb;
  std::unordered_set<std::string> possessive;
};

void Add(Lexicon& lex, std::string_view tag, std::initializer_list<const char*> words) {
  for (const char* w : words) lex.tags.emplace(w, tag);
}

const Lexicon& GetLexicon() {
  static const Lexicon* lexicon = [] {
    auto* lex = new Lexicon;
    Add(*lex, kPosDeterminer,
        {"the", "a", "an", "this", "that", "these", "those", "each", "every",
         "any", "some", "no", "all", "both", "either", "neither", "another",
         "such", "what", "which", "whatever", "whichever"});
    Add(*lex, kPosPronoun,
        {"i", "me", "my", "mine", "you", "your", "yours", "he", "him", "his",
         "she", "her", "hers", "it", "its", "we", "us", "our", "ours", "they",
         "them", "their", "theirs", "itself", "themselves", "yourself",
         "ourselves", "myself", "who", "whom", "whose", "one", "ones",
         "something", "anything", "nothing", "everything", "someone",
         "anyone", "none"});
    lex->possessive = {"my", "your", "his", "her", "its", "our", "their", "whose"};
    Add(*lex, kPosModal,
        {"can", "could", "may", "might", "must", "shall", "should", "will",
         "would", "cannot", "ought"});
    Add(*lex, kPosConjunction,
        {"and", "or", "but", "nor", "yet", "so", "because", "although",
         "though", "unless", "while", "whereas", "if", "whether", "since",
         "otherwise", "then", "than", "else", "when", "where", "once"});
    Add(*lex, kPosParticle,
        {"at", "in", "on", "of", "to", "for", "from", "by", "with", "without",
         "into", "onto", "over", "under", "about", "after", "before",
         "between", "through", "during", "within", "against", "among",
         "along", "across", "behind", "beyond", "per", "via", "up", "down",
         "out", "off", "as", "not", "upon", "until", "till", "towards",
         "toward", "around", "near", "inside", "outside", "instead"});
    Add(*lex, kPosVerb,
        {"is", "are", "was", "were", "be", "been", "being", "am", "do",
         "does", "did", "done", "has", "have", "had", "having", "get", "gets",
         "got", "make", "makes", "made", "take", "takes", "took", "give",
         "gives", "gave", "given", "return", "returns", "returned",
         "compute", "computes", "computed", "calculate", "calculates",
         "check", "checks", "checked", "create", "creates", "created",
         "add", "adds", "added", "remove", "removes", "removed", "find",
         "finds", "found", "read", "reads", "write", "writes", "written",
         "wrote", "raise", "raises", "raised", "convert", "converts",
         "converted", "parse", "parses", "parsed", "call", "calls",
         "called", "use", "uses", "used", "set", "sets", "build", "builds",
         "built", "load", "loads", "loaded", "save", "saves", "saved",
         "open", "opens", "close", "closes", "closed", "run", "runs", "ran",
         "print", "prints", "printed", "update", "updates", "updated",
         "apply", "applies", "applied", "ensure", "ensures", "contain",
         "contains", "contained", "initialize", "initializes", "initialise",
         "handle", "handles", "handled", "process", "processes", "processed",
         "generate", "generates", "generated", "split", "splits", "join",
         "joins", "joined", "sort", "sorts", "sorted", "match", "matches",
         "matched", "copy", "copies", "copied", "send", "sends", "sent",
         "receive", "receives", "received", "store", "stores", "stored",
         "delete", "deletes", "deleted", "insert", "inserts", "inserted",
         "replace", "replaces", "replaced", "yield", "yields", "keep",
         "keeps", "kept", "let", "lets", "see", "sees", "seen", "say", "says",
         "said", "go", "goes", "went", "gone", "come", "comes", "came",
         "need", "needs", "needed", "want", "wants", "try", "tries", "tried",
         "allow", "allows", "allowed", "provide", "provides", "provided",
         "define", "defines", "defined", "determine", "determines",
         "represent", "represents", "indicate", "indicates", "specify",
         "specifies", "specified", "pass", "passes", "passed", "fail",
         "fails", "failed", "validate", "validates", "test", "tests",
         "tested", "wrap", "wraps", "wrapped", "encode", "encodes",
         "encoded", "decode", "decodes", "decoded", "format", "formats",
         "formatted", "register", "registers", "registered", "resolve",
         "resolves", "resolved", "count", "counts", "counted", "append",
         "appends", "appended", "extend", "extends", "extended", "emit",
         "emits", "emitted", "skip", "skips", "skipped", "stop", "stops",
         "stopped", "start", "starts", "started", "begin", "begins", "end",
         "ends", "ended", "accept", "accepts", "accepted", "ignore",
         "ignores", "ignored", "include", "includes", "included", "exclude",
         "excludes", "excluded", "compare", "compares", "compared", "map",
         "maps", "mapped", "filter", "filters", "filtered", "reset",
         "resets", "clear", "clears", "cleared", "show", "shows", "shown",
         "look", "looks", "mean", "means", "meant", "follow", "follows",
         "become", "becomes", "became", "exist", "exists", "existed",
         "require", "requires", "required", "support", "supports",
         "supported", "describe", "describes", "described", "produce",
         "produces", "produced", "select", "selects", "selected", "strip",
         "strips", "stripped", "fetch", "fetches", "fetched", "wait",
         "waits", "lock", "locks", "locked", "search", "searches",
         "searched", "iterate", "iterates", "loop", "loops", "evaluate",
         "evaluates", "evaluated", "execute", "executes", "executed",
         "normalize", "normalizes", "normalized", "expand", "expands",
         "expanded", "quote", "quotes", "quoted", "escape", "escapes",
         "escaped", "reverse", "reverses", "reversed", "merge", "merges",
         "merged", "assume", "assumes", "assumed", "note", "notes",
         "override", "overrides", "overridden", "implement", "implements",
         "implemented"});
    Add(*lex, kPosAdjective,
        {"new", "old", "first", "last", "next", "previous", "current",
         "empty", "full", "true", "false", "valid", "invalid", "default",
         "optional", "required", "simple", "complex", "same", "different",
         "other", "own", "single", "multiple", "many", "few", "more", "most",
         "less", "least", "much", "several", "good", "bad", "large", "small",
         "big", "long", "short", "high", "low", "maximum", "minimum", "max",
         "min", "total", "whole", "entire", "given", "specific", "general",
         "local", "global", "public", "private", "internal", "external",
         "positive", "negative", "zero", "null", "unique", "possible",
         "available", "necessary", "special", "common", "relative",
         "absolute", "absent", "present", "initial", "final", "main",
         "additional", "extra", "original", "actual", "real", "raw", "safe",
         "unsafe", "open", "closed", "abstract", "static", "dynamic",
         "non", "only", "even", "odd", "lower", "upper", "left", "right",
         "top", "bottom", "similar", "equal", "able", "unable", "ready",
         "certain", "correct", "wrong", "leading", "trailing", "whitespace",
         "numeric", "binary", "boolean", "integer", "string", "nested"});
    Add(*lex, kPosNoun,
        {"sum", "value", "values", "list", "lists", "string", "strings",
         "number", "numbers", "name", "names", "file", "files", "path",
         "paths", "key", "keys", "item", "items", "element", "elements",
         "object", "objects", "class", "classes", "function", "functions",
         "method", "methods", "argument", "arguments", "parameter",
         "parameters", "result", "results", "error", "errors", "exception",
         "exceptions", "type", "types", "data", "dict", "dictionary",
         "array", "arrays", "index", "indices", "line", "lines", "char",
         "character", "characters", "word", "words", "text", "byte", "bytes",
         "size", "length", "count", "time", "date", "user", "users", "node",
         "nodes", "tree", "graph", "edge", "edges", "set", "sets", "tuple",
         "tuples", "map", "table", "row", "rows", "column", "columns",
         "field", "fields", "attribute", "attributes", "module", "modules",
         "package", "instance", "instances", "variable", "variables",
         "input", "inputs", "output", "outputs", "buffer", "stream",
         "socket", "server", "client", "request", "response", "message",
         "messages", "header", "headers", "body", "content", "contents",
         "directory", "directories", "option", "options", "config",
         "configuration", "state", "status", "mode", "flag", "flags",
         "format", "pattern", "patterns", "regex", "expression", "default",
         "defaults", "case", "cases", "way", "ways", "part", "parts",
         "point", "points", "position", "offset", "start", "end", "step",
         "steps", "level", "levels", "order", "range", "limit", "width",
         "height", "total", "average", "mean", "maximum", "minimum",
         "self", "cls", "args", "kwargs", "callback", "handler", "event",
         "events", "thread", "threads", "process", "lock", "queue", "stack",
         "cache", "iterator", "generator", "sequence", "sequences", "prefix",
         "suffix", "token", "tokens", "address", "host", "port", "url",
         "uri", "query", "version", "encoding", "locale", "timeout",
         "signal", "socket", "pair", "pairs", "entry", "entries", "record",
         "records", "copy", "default", "number", "test", "tests", "code",
         "source", "target", "targets", "context", "scope", "block", "loop",
         "condition", "statement", "call", "calls", "return", "integer",
         "float", "boolean", "bool", "int", "str", "none", "object",
         "python", "java", "unicode", "ascii", "default", "example",
         "examples", "note", "warning", "warnings", "reason", "problem",
         "person", "people", "thing", "things", "world", "year", "years",
         "day", "days", "month", "hour", "minute", "second", "seconds"});
    for (const char* w :
         {"return", "returns", "sum", "set", "sets", "map", "count", "call",
          "calls", "copy", "test", "tests", "start", "end", "format", "note",
          "process", "lock", "list", "match", "loop", "loops", "search",
          "filter", "yield", "quote", "run", "use", "check", "update",
          "record", "records", "index", "order", "step", "query", "limit",
          "value", "name", "type", "types", "point", "cache", "signal",
          "stack", "queue", "split", "sort", "store", "handle"}) {
      lex->noun_verb.insert(w);
    }
    return lex;
  }();
  return *lexicon;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() + 1 &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string_view SuffixTag(std::string_view w) {
  for (auto s : {"tion", "sion", "ment", "ness", "ity", "ance", "ence", "ship",
                 "ism", "ist", "age", "ure", "er", "ers", "or", "ors"}) {
    if (EndsWith(w, s)) return kPosNoun;
  }
  for (auto s : {"able", "ible", "ful", "less", "ous", "ive", "ical", "al",
                 "ic", "ary", "ish"}) {
    if (EndsWith(w, s)) return kPosAdjective;
  }
  for (auto s : {"ize", "izes", "ise", "ises", "ify", "ifies", "ate", "ates",
                 "ed", "ing"}) {
    if (EndsWith(w, s)) return kPosVerb;
  }
  if (EndsWith(w, "ly")) return kPosOther;
  if (EndsWith(w, "s") && !EndsWith(w, "ss")) return kPosNoun;
  return kPosOther;
}

bool IsListMarker(std::string_view w) {
  if (w.empty()) return false;
  bool digits = true;
  for (char c : w) digits = digits && std::isdigit(static_cast<unsigned char>(c));
  if (digits) return true;
  // Roman numerals and single letters used as enumerators are too ambiguous
  // to tag; only ordinal forms such as "1st" count.
  return w.size() > 2 && std::isdigit(static_cast<unsigned char>(w[0])) &&
         (w.ends_with("st") || w.ends_with("nd") || w.ends_with("rd") ||
          w.ends_with("th"));
}

std::string_view TagOne(const std::string& lower) {
  if (IsListMarker(lower)) return kPosList;
  for (char c : lower) {
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '\'' && c != '-') {
      return kPosOther;
    }
  }
  const Lexicon& lex = GetLexicon();
  if (auto it = lex.tags.find(lower); it != lex.tags.end()) return it->second;
  return SuffixTag(lower);
}

}  // namespace

std::span<const std::string_view> PosTagset() { return kTagset; }

std::vector<std::string> TagWords(std::span<const std::string> words) {
  const Lexicon& lex = GetLexicon();
  std::vector<std::string> tags;
  tags.reserve(words.size());
  std::string prev_word;
  std::string_view prev_tag;
  for (const std::string& word : words) {
    std::string lower;
    lower.reserve(word.size());
    for (char c : word) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    std::string_view tag = TagOne(lower);
    if (lex.noun_verb.count(lower)) {
      if (prev_tag == kPosDeterminer || prev_tag == kPosAdjective ||
          lex.possessive.count(prev_word)) {
        tag = kPosNoun;
      } else if (prev_tag == kPosModal || prev_word == "to") {
        tag = kPosVerb;
      }
    }
    tags.emplace_back(tag);
    prev_word = std::move(lower);
    prev_tag = tags.back();
  }
  return tags;
}

}  // namespace ratex::concepts
