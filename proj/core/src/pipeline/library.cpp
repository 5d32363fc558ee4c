// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

// Built-in synthetic templates. Shapes loosely follow a SPADE-style
// vocabulary (Process / Artifact nodes; Used, WasGeneratedBy, WasTriggeredBy,
// WasDerivedFrom edges). They are illustrative and do not reproduce any real
// recorder's output.

#include <utility>

#include "provbench/pipeline/templates.hpp"

namespace provbench::pipeline {

namespace {

SketchNode process(ElementId id, Properties props) {
  return {std::move(id), "Process", std::move(props)};
}
SketchNode artifact(ElementId id, Properties props) {
  return {std::move(id), "Artifact", std::move(props)};
}
SketchEdge edge(ElementId id, ElementId from, ElementId to, std::string label,
                std::string operation) {
  return {std::move(id), std::move(from), std::move(to), std::move(label),
          {{"operation", std::move(operation)}, {"time", "0"}}};
}

/// A process started from a shell, loading its binary and libc.
GraphSketch startup() {
  GraphSketch g;
  g.nodes = {
      process("proc", {{"name", "bench"},
                       {"exe", "/tmp/bench"},
                       {"uid", "1000"},
                       {"pid", "0"},
                       {"start_time", "0"}}),
      process("shell", {{"name", "bash"}, {"exe", "/bin/bash"}, {"uid", "1000"}}),
      artifact("binary", {{"path", "/tmp/bench"}, {"subtype", "file"}}),
      artifact("ldcache", {{"path", "/etc/ld.so.cache"}, {"subtype", "file"}}),
      artifact("libc", {{"path", "/lib/x86_64-linux-gnu/libc.so.6"},
                        {"subtype", "file"},
                        {"inode", "0"}}),
  };
  g.edges = {
      edge("spawn", "proc", "shell", "WasTriggeredBy", "fork"),
      edge("exec", "proc", "binary", "Used", "execve"),
      edge("cache", "proc", "ldcache", "Used", "open"),
      edge("load", "proc", "libc", "Used", "mmap"),
  };
  return g;
}

SyntheticTemplate make(std::string name, std::string description,
                       GraphSketch delta) {
  SyntheticTemplate t;
  t.name = std::move(name);
  t.description = std::move(description);
  t.background = startup();
  t.delta = std::move(delta);
  t.transient_keys = {"time", "pid", "start_time", "inode"};
  validate(t);
  return t;
}

std::map<std::string, SyntheticTemplate> build_library() {
  std::map<std::string, SyntheticTemplate> lib;
  auto add = [&](SyntheticTemplate t) { lib.emplace(t.name, std::move(t)); };

  // files
  add(make("creat", "create a new file",
           {{artifact("file", {{"path", "/tmp/creat.txt"},
                               {"subtype", "file"},
                               {"inode", "0"}})},
            {edge("gen", "file", "proc", "WasGeneratedBy", "creat")}}));
  add(make("open", "open an existing file for reading",
           {{artifact("file", {{"path", "/tmp/open.txt"}, {"subtype", "file"}})},
            {edge("use", "proc", "file", "Used", "open")}}));
  add(make("close", "close a descriptor; nothing new is recorded", {}));
  add(make("rename", "rename a file",
           {{artifact("old", {{"path", "/tmp/old.txt"}, {"subtype", "file"}}),
             artifact("new", {{"path", "/tmp/new.txt"}, {"subtype", "file"}})},
            {edge("read_old", "proc", "old", "Used", "rename"),
             edge("gen_new", "new", "proc", "WasGeneratedBy", "rename"),
             edge("derive", "new", "old", "WasDerivedFrom", "rename")}}));
  add(make("unlink", "remove a file",
           {{artifact("file", {{"path", "/tmp/unlink.txt"},
                               {"subtype", "file"},
                               {"deleted", "true"}})},
            {edge("gen", "file", "proc", "WasGeneratedBy", "unlink")}}));
  add(make("link", "hard link to the benchmark binary",
           {{artifact("alias", {{"path", "/tmp/bench.link"}, {"subtype", "link"}})},
            {edge("gen", "alias", "proc", "WasGeneratedBy", "link"),
             edge("derive", "alias", "binary", "WasDerivedFrom", "link")}}));
  add(make("write", "write to a fresh file version",
           {{artifact("file", {{"path", "/tmp/write.txt"},
                               {"subtype", "file"},
                               {"version", "1"}})},
            {edge("gen", "file", "proc", "WasGeneratedBy", "write")}}));

  // processes
  add(make("fork", "fork a child process",
           {{process("child", {{"name", "bench"}, {"uid", "1000"}, {"pid", "0"}})},
            {edge("trig", "child", "proc", "WasTriggeredBy", "fork")}}));
  add(make("execve", "replace the process image",
           {{process("image", {{"name", "true"}, {"exe", "/bin/true"}, {"uid", "1000"}}),
             artifact("truebin", {{"path", "/bin/true"}, {"subtype", "file"}})},
            {edge("trig", "image", "proc", "WasTriggeredBy", "execve"),
             edge("image_use", "image", "truebin", "Used", "execve")}}));
  add(make("kill", "signal the parent shell; only an edge is added",
           {{}, {edge("signal", "proc", "shell", "WasTriggeredBy", "kill")}}));

  // permissions
  add(make("chmod", "change the binary's mode",
           {{artifact("mode", {{"path", "/tmp/bench"},
                               {"subtype", "file"},
                               {"mode", "0600"}})},
            {edge("gen", "mode", "proc", "WasGeneratedBy", "chmod"),
             edge("derive", "mode", "binary", "WasDerivedFrom", "chmod")}}));
  add(make("setuid", "drop to a different user id",
           {{process("dropped", {{"name", "bench"},
                                 {"exe", "/tmp/bench"},
                                 {"uid", "65534"}})},
            {edge("trig", "dropped", "proc", "WasTriggeredBy", "setuid")}}));

  // pipes
  add(make("pipe", "create a pipe and write into it",
           {{artifact("pipe", {{"subtype", "pipe"}, {"inode", "0"}})},
            {edge("gen", "pipe", "proc", "WasGeneratedBy", "pipe"),
             edge("use", "proc", "pipe", "Used", "write")}}));

  // scalability: create + unlink of one file, repeated
  SyntheticTemplate scale = make(
      "scale", "create then unlink a file",
      {{artifact("created", {{"path", "/tmp/scale.txt"}, {"subtype", "file"}}),
        artifact("removed", {{"path", "/tmp/scale.txt"},
                             {"subtype", "file"},
                             {"deleted", "true"}})},
       {edge("create", "created", "proc", "WasGeneratedBy", "creat"),
        edge("unlink", "removed", "proc", "WasGeneratedBy", "unlink"),
        edge("version", "removed", "created", "WasDerivedFrom", "unlink")}});
  for (std::size_t k : {1, 2, 4, 8}) {
    auto t = repeat_delta(scale, k, "scale" + std::to_string(k));
    t.description = "create then unlink a file, " + std::to_string(k) + "x";
    add(std::move(t));
  }
  return lib;
}

}  // namespace

const std::map<std::string, SyntheticTemplate>& builtin_templates() {
  static const std::map<std::string, SyntheticTemplate> library = build_library();
  return library;
}

}  // namespace provbench::pipeline
