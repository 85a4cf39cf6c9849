#include "termscape/emit.hpp"

#include "termscape/error.hpp"
#include "termscape/payload.hpp"

#include <fstream>

namespace termscape {

namespace {

// Minimal renderer for the embedded payload. Draws markers and the
// precomputed labels as SVG, lists top terms, shows payload statistics on
// hover and excerpts on click. Never recomputes anything.
constexpr std::string_view kViewer = R"JS(
(function () {
  "use strict";
  var NS = "http" + "://www.w3.org/2000/svg";
  var root = document.getElementById("termscape");
  var payload;
  try {
    payload = JSON.parse(document.getElementById("termscape-payload").textContent);
  } catch (e) {
    root.textContent = "termscape: cannot read payload: " + e;
    return;
  }
  if (payload.schema !== "termscape-payload/1") {
    root.innerHTML = '<div class="ts-error">Unsupported payload schema: ' + String(payload.schema) + "</div>";
    return;
  }
  var meta = payload.metadata, chart = meta.chart, font = meta.font, cats = meta.categories;
  var byTerm = {};
  payload.points.forEach(function (p) { byTerm[p.term] = p; });

  function el(name, attrs, parent) {
    var n = document.createElementNS(NS, name);
    Object.keys(attrs).forEach(function (k) { n.setAttribute(k, attrs[k]); });
    if (parent) parent.appendChild(n);
    return n;
  }
  function html(tag, text, parent, cls) {
    var n = document.createElement(tag);
    if (text !== undefined) n.textContent = text;
    if (cls) n.className = cls;
    if (parent) parent.appendChild(n);
    return n;
  }

  var layout = html("div", undefined, root, "ts-layout");
  var plot = html("div", undefined, layout, "ts-plot");
  var side = html("div", undefined, layout, "ts-side");
  var svg = el("svg", { width: chart.width, height: chart.height, viewBox: "0 0 " + chart.width + " " + chart.height });
  plot.appendChild(svg);
  html("div", cats.a + " frequency →", plot, "ts-axis-x");
  html("div", cats.b + " frequency →", plot, "ts-axis-y");
  var tip = html("div", undefined, root, "ts-tip");
  var panel = html("div", undefined, root, "ts-excerpts");
  var mode = meta.query !== undefined ? "similarity" : meta.color_mode;
  var markers = {};

  function fillOf(p) { return mode === "similarity" ? p.similarity_fill : p.fill; }
  function fmt(v) { return v === null || v === undefined ? "n/a" : String(v); }

  function show(term, evt) {
    var p = byTerm[term];
    if (!p) return;
    tip.style.display = "block";
    tip.style.left = (evt ? evt.pageX + 12 : 0) + "px";
    tip.style.top = (evt ? evt.pageY + 12 : 0) + "px";
    tip.textContent = "";
    html("b", p.term, tip);
    [[cats.a + " frequency", p.freq_a], [cats.b + " frequency", p.freq_b],
     [cats.a + " documents", p.doc_freq_a], [cats.b + " documents", p.doc_freq_b],
     ["z", p.z], ["p", p.p]].forEach(function (row) { html("div", row[0] + ": " + fmt(row[1]), tip); });
    if (markers[term]) markers[term].setAttribute("stroke", "#000");
  }
  function hide(term) {
    tip.style.display = "none";
    if (markers[term]) markers[term].setAttribute("stroke", "none");
  }
  function select(term) {
    panel.textContent = "";
    html("h3", term, panel);
    ["a", "b"].forEach(function (k) {
      html("h4", cats[k], panel);
      (payload.excerpts[term] || []).filter(function (x) { return x.category === k; })
        .forEach(function (x) { html("p", x.text, panel); });
    });
  }

  payload.points.forEach(function (p) {
    var c = el("circle", { cx: p.x_a * chart.width, cy: (1 - p.x_b) * chart.height, r: font.point_radius,
                           fill: fillOf(p), stroke: "none", "data-term": p.term }, svg);
    c.addEventListener("mouseover", function (e) { show(p.term, e); });
    c.addEventListener("mouseout", function () { hide(p.term); });
    c.addEventListener("click", function () { select(p.term); });
    markers[p.term] = c;
  });
  payload.labels.forEach(function (l) {
    var t = el("text", { x: l.rect.x_min, y: l.rect.y_min, "dominant-baseline": "text-before-edge",
                         "font-family": font.family, "font-size": font.font_size, "data-term": l.term }, svg);
    t.textContent = l.term;
    t.addEventListener("mouseover", function (e) { show(l.term, e); });
    t.addEventListener("mouseout", function () { hide(l.term); });
    t.addEventListener("click", function () { select(l.term); });
  });

  function list(title, entries) {
    html("h3", title, side);
    var ol = html("ol", undefined, side);
    entries.forEach(function (e) {
      var li = html("li", e.term, ol);
      li.addEventListener("mouseover", function (ev) { show(e.term, ev); });
      li.addEventListener("mouseout", function () { hide(e.term); });
      li.addEventListener("click", function () { select(e.term); });
    });
  }
  list("Top " + cats.b, payload.top_terms.b);
  list("Top " + cats.a, payload.top_terms.a);
  if (payload.similar_terms) {
    list(cats.b + " terms like “" + meta.query + "”", payload.similar_terms.b);
    list(cats.a + " terms like “" + meta.query + "”", payload.similar_terms.a);
  }
})();
)JS";

constexpr std::string_view kStyle = R"CSS(
body { font-family: sans-serif; margin: 16px; }
.ts-layout { display: flex; gap: 24px; }
.ts-plot svg { border: 1px solid #ccc; }
.ts-side { max-width: 280px; font-size: 13px; }
.ts-side li { cursor: pointer; }
.ts-tip { position: absolute; display: none; background: #fff; border: 1px solid #999; padding: 6px; font-size: 12px; pointer-events: none; }
.ts-excerpts { margin-top: 16px; max-width: 900px; font-size: 13px; }
.ts-error { color: #fff; background: #a50026; padding: 8px; }
)CSS";

std::string escape_html(std::string_view s)
{
    std::string out;
    for (const char c : s)
    {
        switch (c)
        {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

// JSON inside <script> must not contain "</".
std::string script_safe(std::string json)
{
    std::string out;
    out.reserve(json.size());
    for (std::size_t i = 0; i < json.size(); ++i)
    {
        out.push_back(json[i]);
        if (json[i] == '<' && i + 1 < json.size() && json[i + 1] == '/')
            out.push_back('\\');
    }
    return out;
}

} // namespace

std::string_view builtin_viewer()
{
    return kViewer;
}

std::string render_html(const nlohmann::json& payload, const std::optional<std::string>& viewer_bundle)
{
    std::string title = "termscape";
    if (payload.contains("metadata") && payload["metadata"].contains("categories"))
    {
        const auto& cats = payload["metadata"]["categories"];
        title = cats.value("a", std::string()) + " vs. " + cats.value("b", std::string());
    }

    std::string out;
    out += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>";
    out += escape_html(title);
    out += "</title>\n<style>";
    out += kStyle;
    out += "</style>\n</head>\n<body>\n<div id=\"termscape\"></div>\n";
    out += "<script type=\"application/json\" id=\"termscape-payload\">";
    out += script_safe(to_canonical_json(payload));
    out += "</script>\n<script>";
    out += script_safe(viewer_bundle ? *viewer_bundle : std::string(kViewer));
    out += "</script>\n</body>\n</html>\n";
    return out;
}

void emit(const nlohmann::json& payload,
          EmitMode mode,
          const std::filesystem::path& out,
          const std::optional<std::string>& viewer_bundle)
{
    const std::string body = mode == EmitMode::json ? to_canonical_json(payload) + "\n" : render_html(payload, viewer_bundle);
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f)
        throw Error("cannot open " + out.string() + " for writing");
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    f.close();
    if (!f)
        throw Error("write failed for " + out.string());
}

} // namespace termscape
