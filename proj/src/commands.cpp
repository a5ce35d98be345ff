#include "veredit/commands.hpp"

#include <utility>

namespace veredit {

EvalResult editor_eval(const Command& cmd, const Buffer& b) {
    struct Visitor {
        const Buffer& b;
        EvalResult operator()(const InsertLine& c) const {
            return {insert_line(b, c.pos, c.text), Line()};
        }
        EvalResult operator()(const ReadLine& c) const {
            return {b, read_line(b, c.pos, c.fallback)};
        }
        EvalResult operator()(const DeleteLine& c) const {
            return {delete_line(b, c.pos), Line()};
        }
    };
    return std::visit(Visitor{b}, cmd);
}

TraceResult eval_trace(std::span<const Command> cmds, Buffer initial) {
    TraceResult result{std::move(initial), {}};
    result.outputs.reserve(cmds.size());
    for (const Command& cmd : cmds) {
        EvalResult step = editor_eval(cmd, result.buffer);
        result.buffer = std::move(step.buffer);
        result.outputs.push_back(std::move(step.output));
    }
    return result;
}

} // namespace veredit
