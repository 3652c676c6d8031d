"""
rank_macwilliams._base_verification_graph_template
~~~~~~~~~~~~
Contains the template for the identity verification workflow
"""

import logging
from abc import abstractmethod
from typing import Callable, Dict, List, Optional

from langgraph.graph import END, StateGraph
from pydantic import BaseModel, ConfigDict, Field

from codes.data_types import LinearCode, Metric, WeightEnumerator
from data_types import CheckResult, CodeParams, MomentRow, Report
from output_manager.base_output_manager import BaseOutputManager

logger = logging.getLogger(__name__)


class VerificationState(BaseModel):
    """
    Represents the state of the verification graph.

    Attributes:
        code: The code under verification
        params: Its parameters (q, m, n, k)
        guard: Enumeration guard for codeword enumeration
        workers: Worker processes for codeword enumeration
        hadamard_guard: Largest q^{mn} summed by the Hadamard oracle
        enumerators: Brute-force enumerators of the code, per metric
        dual_code: The dual code
        dual_enumerators: Brute-force enumerators of the dual, per metric
        transforms: Analytic dual enumerators, per metric
        moments: Both sides of every moment identity
        checks: Outcomes of all checks so far
        report: The finished report
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    code: Optional[LinearCode] = None
    params: Optional[CodeParams] = None
    guard: Optional[int] = None
    workers: Optional[int] = None
    hadamard_guard: Optional[int] = None
    enumerators: Dict[Metric, WeightEnumerator] = Field(default_factory=dict)
    dual_code: Optional[LinearCode] = None
    dual_enumerators: Dict[Metric, WeightEnumerator] = Field(default_factory=dict)
    transforms: Dict[Metric, WeightEnumerator] = Field(default_factory=dict)
    moments: List[MomentRow] = Field(default_factory=list)
    checks: List[CheckResult] = Field(default_factory=list)
    report: Optional[Report] = None


class BaseVerificationGraphTemplate:
    """
    Template pattern for the identity verification workflow.

    Defines the structure and flow of the graph, providing abstract
    methods that need to be implemented by concrete subclasses.
    """

    def __init__(self, save_manager: Optional[BaseOutputManager] = None) -> None:
        """
        Initialize the BaseVerificationGraphTemplate.

        Args:
            save_manager: Output manager that receives the finished report
        """
        self._save_manager = save_manager
        self._graph: Optional[Callable] = None
        logger.info("Initialized BaseVerificationGraphTemplate")

    def _create_verification_graph_structure(self) -> None:
        """
        Creates the verification graph structure.
        """
        logger.info("Creating verification graph structure")
        workflow: StateGraph = StateGraph(VerificationState)

        logger.info("Adding nodes to the workflow")
        workflow.add_node("codeword_enumeration", self.codeword_enumeration_node)
        workflow.add_node("dual_enumeration", self.dual_enumeration_node)
        workflow.add_node("transform_checks", self.transform_checks_node)
        workflow.add_node("moment_checks", self.moment_checks_node)
        workflow.add_node("mrd_checks", self.mrd_checks_node)
        workflow.add_node("hadamard_checks", self.hadamard_checks_node)
        workflow.add_node("hadamard_skip", self.hadamard_skip_node)
        workflow.add_node("report_saving", self.report_saving_node)

        logger.info("Setting entry point and connecting nodes")
        workflow.set_entry_point("codeword_enumeration")
        workflow.add_edge("codeword_enumeration", "dual_enumeration")
        workflow.add_edge("dual_enumeration", "transform_checks")
        workflow.add_edge("transform_checks", "moment_checks")
        workflow.add_edge("moment_checks", "mrd_checks")

        # the Hadamard oracle only runs for prime q inside its guard
        logger.info("Adding conditional edges for the Hadamard checks")
        workflow.add_conditional_edges(
            "mrd_checks",
            self.hadamard_decision_node,
            {"hadamard": "hadamard_checks", "skip": "hadamard_skip"},
        )
        workflow.add_edge("hadamard_checks", "report_saving")
        workflow.add_edge("hadamard_skip", "report_saving")
        workflow.add_edge("report_saving", END)

        logger.info("Compiling the graph")
        self._graph = workflow.compile()
        logger.info("Verification graph structure created successfully")

    def process(
        self,
        code: LinearCode,
        guard: Optional[int] = None,
        workers: Optional[int] = None,
        hadamard_guard: Optional[int] = None,
    ) -> Report:
        """
        Run every identity check on a code.

        Args:
            code: the code to verify
            guard: enumeration guard (settings default when None)
            workers: enumeration workers (settings default when None)
            hadamard_guard: Hadamard guard (settings default when None)

        Returns:
            The verification report
        """
        if not self._graph:
            logger.info("Graph not initialized, creating now")
            self._create_verification_graph_structure()

        params = CodeParams(q=code.tower.q, m=code.tower.m, n=code.n, k=code.k)
        initial_state = VerificationState(
            code=code, params=params, guard=guard, workers=workers, hadamard_guard=hadamard_guard
        )
        logger.info(f"Invoking graph to verify {code!r}")
        try:
            result = self._graph.invoke(initial_state, {"recursion_limit": 50})
        except Exception as e:
            logger.error(f"Error verifying {code!r}: {str(e)}", exc_info=True)
            raise

        final_state = result if isinstance(result, VerificationState) else VerificationState(**result)
        logger.info(f"Finished verification of {code!r} with status '{final_state.report.status.value}'")
        return final_state.report

    @abstractmethod
    def codeword_enumeration_node(self, state: VerificationState) -> dict:
        """
        Enumerate the code under both metrics.

        Raises:
            NotImplementedError: This method must be implemented by subclasses
        """
        raise NotImplementedError("Codeword enumeration node is not implemented")

    @abstractmethod
    def dual_enumeration_node(self, state: VerificationState) -> dict:
        """
        Build the dual code and enumerate it.

        Raises:
            NotImplementedError: This method must be implemented by subclasses
        """
        raise NotImplementedError("Dual enumeration node is not implemented")

    @abstractmethod
    def transform_checks_node(self, state: VerificationState) -> dict:
        """
        Compare the analytic transforms against the dual enumerators.

        Raises:
            NotImplementedError: This method must be implemented by subclasses
        """
        raise NotImplementedError("Transform checks node is not implemented")

    @abstractmethod
    def moment_checks_node(self, state: VerificationState) -> dict:
        raise NotImplementedError("Moment checks node is not implemented")

    @abstractmethod
    def mrd_checks_node(self, state: VerificationState) -> dict:
        raise NotImplementedError("MRD checks node is not implemented")

    @abstractmethod
    def hadamard_decision_node(self, state: VerificationState) -> str:
        """
        Decide whether the Hadamard oracle can run.

        Returns:
            Decision string: 'hadamard' or 'skip'

        Raises:
            NotImplementedError: This method must be implemented by subclasses
        """
        raise NotImplementedError("Hadamard decision node is not implemented")

    @abstractmethod
    def hadamard_checks_node(self, state: VerificationState) -> dict:
        raise NotImplementedError("Hadamard checks node is not implemented")

    @abstractmethod
    def hadamard_skip_node(self, state: VerificationState) -> dict:
        raise NotImplementedError("Hadamard skip node is not implemented")

    @abstractmethod
    def report_saving_node(self, state: VerificationState) -> dict:
        """
        Assemble the report and hand it to the output manager.

        Raises:
            NotImplementedError: This method must be implemented by subclasses
        """
        raise NotImplementedError("Report saving node is not implemented")
