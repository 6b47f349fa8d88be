#!/usr/bin/env python3
"""Regenerates fixtures/synthetic: a deterministic ~200-snippet corpus.

Five API families, each labelled with its task title in a leading comment
on most snippets, plus unrelated noise snippets, a few snippets that carry a
title but unrelated code, and whitespace/comment-only copies that the
dedupe stage should collapse.

    python3 tools/gen_synthetic_corpus.py [out_dir]
"""

import os
import random
import sys

SEED = 20150827

FAMILIES = {
    "menu_undo": {
        "title": "GEFActionConstants.GROUP UNDO,action",
        "ext": ".java",
        "core": [
            "GEFActionConstants.addStandardActionGroups(manager);",
            "IAction action = actionRegistry.getAction(ActionFactory.UNDO.getId());",
            "manager.appendToGroup(GEFActionConstants.GROUP_UNDO, action);",
        ],
        "optional": [
            "if (action.isEnabled()) { log.debug(\"undo enabled\"); }",
            "manager.add(new Separator());",
            "stack.markSaveLocation();",
            "action.setToolTipText(Messages.UNDO);",
            "manager.update(true);",
        ],
    },
    "menu_view": {
        "title": "GEFActionConstants.GROUP VIEW,action",
        "ext": ".java",
        "core": [
            "GEFActionConstants.addStandardActionGroups(manager);",
            "IAction action = actionRegistry.getAction(ShowMethodSignatureAction.TEXT);",
            "manager.appendToGroup(GEFActionConstants.GROUP_VIEW, action);",
        ],
        "optional": [
            "if (action.isEnabled()) { manager.markDirty(); }",
            "viewer.refresh();",
            "manager.add(new Separator());",
            "action.setChecked(viewer.isVisible());",
            "manager.update(false);",
        ],
    },
    "http_response": {
        "title": "HTTP Response.setContent",
        "ext": ".java",
        "core": [
            "response.setContentType(\"text/html\");",
            "response.setContent(body.getBytes(charset));",
            "response.flushBuffer();",
        ],
        "optional": [
            "response.setStatus(200);",
            "response.addHeader(\"Cache-Control\", \"no-cache\");",
            "String body = template.render(model);",
            "response.setCharacterEncoding(\"UTF-8\");",
            "log.info(\"rendered {}\", request.getRequestURI());",
        ],
    },
    "web_request": {
        "title": "HTTP Web Request.getResponse",
        "ext": ".java",
        "core": [
            "WebRequest request = WebRequest.create(url);",
            "WebResponse response = request.getResponse();",
            "Stream stream = response.getResponseStream();",
            "response.close();",
        ],
        "optional": [
            "request.setMethod(\"GET\");",
            "request.setTimeout(5000);",
            "String text = reader.readToEnd();",
            "request.getHeaders().add(\"Accept\", \"application/json\");",
            "log.debug(response.getStatusCode());",
        ],
    },
    "sql_open": {
        "title": "SQL Connection open",
        "ext": ".java",
        "core": [
            "SqlConnection connection = factory.createConnection(connectionString);",
            "connection.open();",
            "SqlCommand command = connection.createCommand();",
            "connection.close();",
        ],
        "optional": [
            "command.setCommandText(\"SELECT * FROM friends\");",
            "SqlDataReader reader = command.executeReader();",
            "while (reader.read()) { names.add(reader.getString(0)); }",
            "command.setTimeout(30);",
            "transaction.commit();",
        ],
    },
}

NOISE_CALLS = [
    "Post post = graph.createPost(message);",
    "graph.publish(post);",
    "profile.render(user.getName());",
    "String json = mapper.writeValueAsString(payload);",
    "File file = Paths.get(dir, name).toFile();",
    "Files.write(file.toPath(), bytes);",
    "cache.put(key, value);",
    "timer.schedule(task, 1000);",
    "list.sort(Comparator.naturalOrder());",
    "feed.subscribe(listener);",
    "album.addPhoto(photo);",
    "notifications.send(user, text);",
]


def family_snippet(rng, serial, family, with_title):
    fam = FAMILIES[family]
    body = list(fam["core"])
    # Sprinkle optional statements between core ones, order of core kept.
    for stmt in rng.sample(fam["optional"], rng.randint(1, 3)):
        body.insert(rng.randint(0, len(body)), stmt)
    if rng.random() < 0.25:
        body.insert(rng.randint(0, len(body)), rng.choice(NOISE_CALLS))
    if rng.random() < 0.2:
        body.pop(rng.randrange(len(body)))  # partial usage
    lines = []
    if with_title:
        lines.append("// " + fam["title"])
    lines.append("public class %s%03d {" % (family.title().replace("_", ""), serial))
    lines.append("    public void run() {")
    lines.extend("        " + s for s in body)
    lines.append("    }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def noise_snippet(rng, serial, title=None):
    lines = []
    if title:
        lines.append("// " + title)
    lines.append("public class Misc%03d {" % serial)
    lines.append("    public void run() {")
    for s in rng.sample(NOISE_CALLS, rng.randint(2, 5)):
        lines.append("        " + s)
    lines.append("    }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "fixtures", "synthetic")
    os.makedirs(out_dir, exist_ok=True)
    for name in os.listdir(out_dir):
        os.remove(os.path.join(out_dir, name))
    rng = random.Random(SEED)
    files = []
    serial = 0
    for family in FAMILIES:
        for _ in range(32):
            serial += 1
            files.append(("%s_%03d%s" % (family, serial, FAMILIES[family]["ext"]),
                          family_snippet(rng, serial, family, rng.random() < 0.75)))
    titles = [f["title"] for f in FAMILIES.values()]
    for _ in range(30):
        serial += 1
        title = rng.choice(titles) if rng.random() < 0.3 else None
        files.append(("misc_%03d.java" % serial, noise_snippet(rng, serial, title)))
    # Whitespace/comment-only copies of earlier family snippets.
    for name, text in rng.sample(files[:160], 10):
        serial += 1
        copy = "// copied from a forum answer\n" + text.replace("    ", "  ").replace(";\n", ";\n\n", 1)
        files.append(("copy_%03d_%s" % (serial, name), copy))
    for name, text in files:
        with open(os.path.join(out_dir, name), "w") as f:
            f.write(text)
    print("wrote %d snippets to %s" % (len(files), os.path.normpath(out_dir)))


if __name__ == "__main__":
    main()
