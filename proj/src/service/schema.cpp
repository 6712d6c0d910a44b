#include "coanet/service/schema.hpp"

namespace coanet {

std::string_view centrality_schema_xsd() {
    static constexpr std::string_view xsd = R"(<?xml version="1.0" encoding="UTF-8"?>
<xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema" elementFormDefault="qualified">
  <xs:element name="centralityResult">
    <xs:complexType>
      <xs:sequence>
        <xs:element name="author" minOccurs="0" maxOccurs="unbounded">
          <xs:complexType>
            <xs:simpleContent>
              <xs:extension base="xs:string">
                <xs:attribute name="rank" type="xs:positiveInteger" use="required"/>
                <xs:attribute name="raw" type="xs:double" use="required"/>
                <xs:attribute name="normalized" type="xs:double" use="required"/>
                <xs:attribute name="publications" type="xs:nonNegativeInteger" use="required"/>
              </xs:extension>
            </xs:simpleContent>
          </xs:complexType>
        </xs:element>
      </xs:sequence>
      <xs:attribute name="repository" type="xs:string" use="required"/>
      <xs:attribute name="partitionKind" use="required">
        <xs:simpleType>
          <xs:restriction base="xs:string">
            <xs:enumeration value="repository_wide"/>
            <xs:enumeration value="ddc_main"/>
            <xs:enumeration value="ddc_exact"/>
          </xs:restriction>
        </xs:simpleType>
      </xs:attribute>
      <xs:attribute name="partitionCode">
        <xs:simpleType>
          <xs:restriction base="xs:string">
            <xs:pattern value="[0-9]{3}"/>
          </xs:restriction>
        </xs:simpleType>
      </xs:attribute>
      <xs:attribute name="mode" use="required">
        <xs:simpleType>
          <xs:restriction base="xs:string">
            <xs:enumeration value="unweighted"/>
            <xs:enumeration value="weighted"/>
          </xs:restriction>
        </xs:simpleType>
      </xs:attribute>
      <xs:attribute name="generatedAt" type="xs:dateTime" use="required"/>
    </xs:complexType>
  </xs:element>
</xs:schema>
)";
    return xsd;
}

} // namespace coanet
